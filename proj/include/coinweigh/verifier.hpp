// Condition checks, exhaustive simulate-then-decode verification, and the
// brute-force existence search over vector sets.

#ifndef COINWEIGH_VERIFIER_HPP
#define COINWEIGH_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coinweigh/core.hpp"

namespace coinweigh {

enum class Condition { balanced, distinct, opposite_free, zero_free, all_ones_free };

std::string to_string(Condition c);
Condition parse_condition(std::string_view name);

struct ConditionSet
{
	bool balanced = false;
	bool distinct = false;
	bool opposite_free = false;
	bool zero_free = false;
	bool all_ones_free = false;

	bool contains(Condition c) const;
	ConditionSet with(Condition c, bool on = true) const;
	ConditionSet without(const ConditionSet& waived) const;

	friend bool operator==(const ConditionSet&, const ConditionSet&) = default;
};

std::string to_string(const ConditionSet& cs);

struct ConditionFailure
{
	Condition condition;
	// Offending ids (1-based coins; n+1 is the genuine coin). Empty for balanced.
	std::vector<int> coins;
	// Entrywise sum over all vectors, filled for balanced failures.
	std::vector<int> residual;
};

struct DecodeFailure
{
	Configuration configuration;
	std::string expected;
	std::string got;
};

struct VerificationReport
{
	bool passed = true;
	std::vector<ConditionFailure> condition_failures;
	std::vector<DecodeFailure> decode_failures;
	std::uint64_t configurations_checked = 0;
	// Configurations answered with sign "unknown" (only legal when the sign is not required).
	std::uint64_t unknown_sign_answers = 0;
};

/// Stable text form, one failure per line.
std::string format_report(const VerificationReport& report);

/// Balanced is tested over every vector including the genuine coin; the other
/// conditions only look at real coins.
VerificationReport check_conditions(const Scheme& s, const ConditionSet& cs);

/// Simulates and decodes every admissible configuration. Variants with a known
/// weight comparison are decoded under the comparison named by each
/// configuration's sign, so they are checked for 2n (+1) configurations as well.
/// A scheme whose pans are unequal in some trial is reported as a balanced
/// failure, since such a weighing is not allowed.
VerificationReport verify_exhaustive(const Scheme& s);

enum class SearchStatus { found, none, budget_exceeded };

struct SearchResult
{
	SearchStatus status = SearchStatus::none;
	std::optional<Scheme> scheme;
	std::uint64_t nodes = 0;
};

std::string to_string(SearchStatus s);

inline constexpr std::uint64_t default_search_budget = 200'000'000;

/// Exhaustive search for coin vectors (in lexicographic order) meeting the
/// variant's construction conditions minus `waive`. For variants with an extra
/// coin the genuine vector is whatever restores the balance, provided it is a
/// ternary vector.
SearchResult search_nonadaptive(VariantId variant, int n, int k, const ConditionSet& waive = {},
                                std::uint64_t budget = default_search_budget);

/// True when no 2-element subset of {-1,0,1}^k is balanced, contains 0^k and
/// has distinct members.
bool complement_argument_check(int k);

} // namespace coinweigh

#endif
