// Domain types shared by every part of the library: ternary placement
// vectors, problem variants, configurations, outcomes and schemes.

#ifndef COINWEIGH_CORE_HPP
#define COINWEIGH_CORE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coinweigh {

/// Placement of one coin across k trials: -1 left pan, 0 off the scale, +1 right pan.
class TernaryVector
{
public:
	TernaryVector() = default;
	explicit TernaryVector(std::vector<std::int8_t> entries);
	TernaryVector(std::initializer_list<int> entries);

	static TernaryVector zeros(int k);
	static TernaryVector ones(int k);
	static TernaryVector minus_ones(int k);

	// Inverse of code(): the code-th vector of {-1,0,1}^k in lexicographic order.
	static TernaryVector from_code(std::uint64_t code, int k);

	int size() const { return static_cast<int>(entries_.size()); }
	int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
	std::span<const std::int8_t> entries() const { return entries_; }

	bool is_zero() const;
	bool is_constant(int value) const;

	// Rank in the lexicographic enumeration of {-1,0,1}^k (with -1 < 0 < +1).
	std::uint64_t code() const;

	friend bool operator==(const TernaryVector&, const TernaryVector&) = default;
	friend std::strong_ordering operator<=>(const TernaryVector& a, const TernaryVector& b)
	{
		return a.entries_ <=> b.entries_;
	}

private:
	std::vector<std::int8_t> entries_;
};

TernaryVector negate(const TernaryVector& v);
TernaryVector concat(const TernaryVector& v, const TernaryVector& w);
// Entrywise integer sum, not clamped. Every vector must have length k.
std::vector<int> vector_sum(std::span<const TernaryVector> vectors, int k);
std::vector<int> vector_sum(std::span<const TernaryVector> vectors);

/// "nl" -> (0,-1). Throws std::invalid_argument on an empty string or a foreign character.
TernaryVector parse_lnr(std::string_view text);
std::string format_lnr(const TernaryVector& v);

/// All of {-1,0,1}^k in lexicographic order.
std::vector<TernaryVector> all_vectors(int k);

std::uint64_t pow3(int k);

// ---------------------------------------------------------------------------
// Variants

enum class VariantId { P1 = 1, P2, P3, P4, P5, P6, P7, P8, P9, P10, P11, P12 };

struct Variant
{
	VariantId id;
	bool weight_known;     // Q1: is it known whether the counterfeit is heavier or lighter
	bool existence_known;  // Q2: is it known that a counterfeit exists
	bool extra_coin;       // Q3: is a known-genuine coin available
	bool sign_required;    // Q4: must the answer report heavier/lighter
};

Variant variant_info(VariantId id);
std::vector<VariantId> all_variants();
std::string to_string(VariantId id);
VariantId parse_variant(std::string_view name);

// ---------------------------------------------------------------------------
// Configurations, outcomes, answers

enum class Sign { lighter, heavier, unknown, none };

std::string to_string(Sign sign);

/// Hidden ground truth: culprit 0 means there is no counterfeit coin.
struct Configuration
{
	int culprit = 0;
	Sign sign = Sign::none;

	static Configuration no_counterfeit() { return {}; }
	friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct Answer
{
	int culprit = 0;
	Sign sign = Sign::none;

	friend bool operator==(const Answer&, const Answer&) = default;
};

std::string to_string(const Configuration& c);
std::string to_string(const Answer& a);

/// One scale reading. left means the left pan sinks.
enum class Tilt : char { left = 'l', balanced = 'b', right = 'r' };

struct Outcome
{
	std::vector<Tilt> symbols;

	int size() const { return static_cast<int>(symbols.size()); }
	friend bool operator==(const Outcome&, const Outcome&) = default;
};

Outcome parse_outcome(std::string_view text);
std::string format_outcome(const Outcome& o);
std::optional<Tilt> parse_tilt(char c);

// ---------------------------------------------------------------------------
// Schemes

/// A non-adaptive weighing scheme. Coin i (1-based) is placed according to
/// coins()[i-1]; the optional genuine coin has id n+1.
class Scheme
{
public:
	Scheme(VariantId variant, int k, std::vector<TernaryVector> coins,
	       std::optional<TernaryVector> genuine = std::nullopt);

	VariantId variant() const { return variant_; }
	int n() const { return static_cast<int>(coins_.size()); }
	int k() const { return k_; }
	const std::vector<TernaryVector>& coins() const { return coins_; }
	const TernaryVector& coin(int id) const { return coins_.at(static_cast<std::size_t>(id - 1)); }
	const std::optional<TernaryVector>& genuine() const { return genuine_; }
	int genuine_id() const { return n() + 1; }

	friend bool operator==(const Scheme&, const Scheme&) = default;

private:
	VariantId variant_;
	int k_;
	std::vector<TernaryVector> coins_;
	std::optional<TernaryVector> genuine_;
};

struct Pans
{
	std::vector<int> left;
	std::vector<int> right;
};

/// Coins on each pan in trial j (1-based). The genuine coin shows up as id n+1.
Pans trial_pans(const Scheme& s, int j);

/// Every configuration the variant admits, in a fixed order: coins 1..n with
/// heavier before lighter, followed by "no counterfeit" when existence is unknown.
/// Variants with a known weight comparison still list both signs; the sign of
/// the configuration is then the comparison the solver is told.
std::vector<Configuration> admissible_configurations(VariantId variant, int n);

void validate_configuration(VariantId variant, int n, const Configuration& c);

Outcome simulate(const Scheme& s, const Configuration& c);

class DecodeError : public std::runtime_error
{
public:
	enum class Kind { unreachable, ambiguous };
	DecodeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
	Kind kind() const { return kind_; }

private:
	Kind kind_;
};

/// Lookup structure for repeated decoding against one scheme.
class Decoder
{
public:
	explicit Decoder(const Scheme& s);

	// known_comparison is required (heavier or lighter) for variants with a
	// known weight comparison and ignored otherwise.
	Answer decode(const Outcome& o, std::optional<Sign> known_comparison = std::nullopt) const;

private:
	const Scheme* scheme_;
	Variant info_;
	std::unordered_map<std::uint64_t, std::vector<int>> by_code_;
	bool has_zero_coin_ = false;
};

Answer decode(const Scheme& s, const Outcome& o, std::optional<Sign> known_comparison = std::nullopt);

} // namespace coinweigh

#endif
