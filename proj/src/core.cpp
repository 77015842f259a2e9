#include "coinweigh/core.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace coinweigh {

namespace {

void check_trit(int value)
{
	if (value < -1 || value > 1)
	{
		throw std::invalid_argument("ternary entry out of range: " + std::to_string(value));
	}
}

} // namespace

TernaryVector::TernaryVector(std::vector<std::int8_t> entries) : entries_(std::move(entries))
{
	for (auto e : entries_)
	{
		check_trit(e);
	}
}

TernaryVector::TernaryVector(std::initializer_list<int> entries)
{
	entries_.reserve(entries.size());
	for (int e : entries)
	{
		check_trit(e);
		entries_.push_back(static_cast<std::int8_t>(e));
	}
}

TernaryVector TernaryVector::zeros(int k)
{
	return TernaryVector(std::vector<std::int8_t>(static_cast<std::size_t>(k), 0));
}

TernaryVector TernaryVector::ones(int k)
{
	return TernaryVector(std::vector<std::int8_t>(static_cast<std::size_t>(k), 1));
}

TernaryVector TernaryVector::minus_ones(int k)
{
	return TernaryVector(std::vector<std::int8_t>(static_cast<std::size_t>(k), -1));
}

TernaryVector TernaryVector::from_code(std::uint64_t code, int k)
{
	std::vector<std::int8_t> entries(static_cast<std::size_t>(k));
	for (int j = k - 1; j >= 0; --j)
	{
		entries[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(static_cast<int>(code % 3) - 1);
		code /= 3;
	}
	return TernaryVector(std::move(entries));
}

bool TernaryVector::is_zero() const
{
	return is_constant(0);
}

bool TernaryVector::is_constant(int value) const
{
	return std::all_of(entries_.begin(), entries_.end(), [value](auto e) { return e == value; });
}

std::uint64_t TernaryVector::code() const
{
	std::uint64_t code = 0;
	for (auto e : entries_)
	{
		code = code * 3 + static_cast<std::uint64_t>(e + 1);
	}
	return code;
}

TernaryVector negate(const TernaryVector& v)
{
	std::vector<std::int8_t> entries(v.entries().begin(), v.entries().end());
	for (auto& e : entries)
	{
		e = static_cast<std::int8_t>(-e);
	}
	return TernaryVector(std::move(entries));
}

TernaryVector concat(const TernaryVector& v, const TernaryVector& w)
{
	std::vector<std::int8_t> entries(v.entries().begin(), v.entries().end());
	entries.insert(entries.end(), w.entries().begin(), w.entries().end());
	return TernaryVector(std::move(entries));
}

std::vector<int> vector_sum(std::span<const TernaryVector> vectors, int k)
{
	std::vector<int> sum(static_cast<std::size_t>(k), 0);
	for (const auto& v : vectors)
	{
		if (v.size() != k)
		{
			throw std::invalid_argument("vector_sum: length mismatch");
		}
		for (int j = 0; j < k; ++j)
		{
			sum[static_cast<std::size_t>(j)] += v[j];
		}
	}
	return sum;
}

std::vector<int> vector_sum(std::span<const TernaryVector> vectors)
{
	return vector_sum(vectors, vectors.empty() ? 0 : vectors.front().size());
}

TernaryVector parse_lnr(std::string_view text)
{
	if (text.empty())
	{
		throw std::invalid_argument("empty l/n/r string");
	}
	std::vector<std::int8_t> entries;
	entries.reserve(text.size());
	for (char c : text)
	{
		switch (c)
		{
		case 'l': entries.push_back(-1); break;
		case 'n': entries.push_back(0); break;
		case 'r': entries.push_back(1); break;
		default:
			throw std::invalid_argument(std::string("invalid l/n/r character '") + c + "'");
		}
	}
	return TernaryVector(std::move(entries));
}

std::string format_lnr(const TernaryVector& v)
{
	static constexpr std::array<char, 3> symbols{'l', 'n', 'r'};
	std::string out;
	out.reserve(static_cast<std::size_t>(v.size()));
	for (auto e : v.entries())
	{
		out.push_back(symbols[static_cast<std::size_t>(e + 1)]);
	}
	return out;
}

std::uint64_t pow3(int k)
{
	if (k < 0 || k > 39)
	{
		throw std::invalid_argument("trial count out of supported range: " + std::to_string(k));
	}
	std::uint64_t p = 1;
	for (int i = 0; i < k; ++i)
	{
		p *= 3;
	}
	return p;
}

std::vector<TernaryVector> all_vectors(int k)
{
	const auto count = pow3(k);
	std::vector<TernaryVector> out;
	out.reserve(count);
	for (std::uint64_t c = 0; c < count; ++c)
	{
		out.push_back(TernaryVector::from_code(c, k));
	}
	return out;
}

// ---------------------------------------------------------------------------

Variant variant_info(VariantId id)
{
	// Q1..Q4 answers per row of the taxonomy table.
	switch (id)
	{
	case VariantId::P1: return {id, true, true, true, true};
	case VariantId::P2: return {id, true, true, false, true};
	case VariantId::P3: return {id, true, false, true, true};
	case VariantId::P4: return {id, true, false, false, true};
	case VariantId::P5: return {id, false, true, true, true};
	case VariantId::P6: return {id, false, true, true, false};
	case VariantId::P7: return {id, false, true, false, true};
	case VariantId::P8: return {id, false, true, false, false};
	case VariantId::P9: return {id, false, false, true, true};
	case VariantId::P10: return {id, false, false, true, false};
	case VariantId::P11: return {id, false, false, false, true};
	case VariantId::P12: return {id, false, false, false, false};
	}
	throw std::invalid_argument("unknown variant");
}

std::vector<VariantId> all_variants()
{
	std::vector<VariantId> out;
	for (int i = 1; i <= 12; ++i)
	{
		out.push_back(static_cast<VariantId>(i));
	}
	return out;
}

std::string to_string(VariantId id)
{
	return "P" + std::to_string(static_cast<int>(id));
}

VariantId parse_variant(std::string_view name)
{
	for (auto id : all_variants())
	{
		if (name == to_string(id))
		{
			return id;
		}
	}
	throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected P1..P12)");
}

std::string to_string(Sign sign)
{
	switch (sign)
	{
	case Sign::lighter: return "lighter";
	case Sign::heavier: return "heavier";
	case Sign::unknown: return "unknown";
	case Sign::none: return "none";
	}
	return "?";
}

std::string to_string(const Configuration& c)
{
	if (c.culprit == 0)
	{
		return "(none)";
	}
	return "(" + std::to_string(c.culprit) + "," + to_string(c.sign) + ")";
}

std::string to_string(const Answer& a)
{
	if (a.culprit == 0)
	{
		return "(none)";
	}
	return "(" + std::to_string(a.culprit) + "," + to_string(a.sign) + ")";
}

std::optional<Tilt> parse_tilt(char c)
{
	switch (c)
	{
	case 'l': return Tilt::left;
	case 'b': return Tilt::balanced;
	case 'r': return Tilt::right;
	default: return std::nullopt;
	}
}

Outcome parse_outcome(std::string_view text)
{
	Outcome o;
	for (char c : text)
	{
		auto t = parse_tilt(c);
		if (!t)
		{
			throw std::invalid_argument(std::string("invalid outcome symbol '") + c + "'");
		}
		o.symbols.push_back(*t);
	}
	return o;
}

std::string format_outcome(const Outcome& o)
{
	std::string out;
	for (auto t : o.symbols)
	{
		out.push_back(static_cast<char>(t));
	}
	return out;
}

// ---------------------------------------------------------------------------

Scheme::Scheme(VariantId variant, int k, std::vector<TernaryVector> coins, std::optional<TernaryVector> genuine)
	: variant_(variant), k_(k), coins_(std::move(coins)), genuine_(std::move(genuine))
{
	if (k < 0)
	{
		throw std::invalid_argument("negative trial count");
	}
	for (const auto& v : coins_)
	{
		if (v.size() != k)
		{
			throw std::invalid_argument("coin vector length " + std::to_string(v.size()) + " does not match k=" +
			                            std::to_string(k));
		}
	}
	const bool wants_genuine = variant_info(variant).extra_coin;
	if (wants_genuine != genuine_.has_value())
	{
		throw std::invalid_argument(wants_genuine ? to_string(variant) + " requires a genuine-coin vector"
		                                          : to_string(variant) + " has no genuine coin");
	}
	if (genuine_ && genuine_->size() != k)
	{
		throw std::invalid_argument("genuine vector length does not match k");
	}
}

Pans trial_pans(const Scheme& s, int j)
{
	if (j < 1 || j > s.k())
	{
		throw std::out_of_range("trial index " + std::to_string(j) + " outside 1.." + std::to_string(s.k()));
	}
	Pans pans;
	auto place = [&](int id, const TernaryVector& v) {
		if (v[j - 1] < 0)
		{
			pans.left.push_back(id);
		}
		else if (v[j - 1] > 0)
		{
			pans.right.push_back(id);
		}
	};
	for (int i = 1; i <= s.n(); ++i)
	{
		place(i, s.coin(i));
	}
	if (s.genuine())
	{
		place(s.genuine_id(), *s.genuine());
	}
	return pans;
}

std::vector<Configuration> admissible_configurations(VariantId variant, int n)
{
	std::vector<Configuration> out;
	out.reserve(static_cast<std::size_t>(2 * n + 1));
	for (int i = 1; i <= n; ++i)
	{
		out.push_back({i, Sign::heavier});
		out.push_back({i, Sign::lighter});
	}
	if (!variant_info(variant).existence_known)
	{
		out.push_back(Configuration::no_counterfeit());
	}
	return out;
}

void validate_configuration(VariantId variant, int n, const Configuration& c)
{
	if (c.culprit == 0)
	{
		if (c.sign != Sign::none)
		{
			throw std::invalid_argument("no-counterfeit configuration must carry sign none");
		}
		if (variant_info(variant).existence_known)
		{
			throw std::invalid_argument(to_string(variant) + " guarantees a counterfeit coin");
		}
		return;
	}
	if (c.culprit < 0 || c.culprit > n)
	{
		throw std::out_of_range("culprit " + std::to_string(c.culprit) + " outside 1.." + std::to_string(n));
	}
	if (c.sign != Sign::heavier && c.sign != Sign::lighter)
	{
		throw std::invalid_argument("counterfeit coin must be heavier or lighter");
	}
}

Outcome simulate(const Scheme& s, const Configuration& c)
{
	validate_configuration(s.variant(), s.n(), c);
	Outcome o;
	o.symbols.assign(static_cast<std::size_t>(s.k()), Tilt::balanced);
	if (c.culprit == 0)
	{
		return o;
	}
	const auto& v = s.coin(c.culprit);
	const int direction = c.sign == Sign::heavier ? 1 : -1;
	for (int j = 0; j < s.k(); ++j)
	{
		const int t = v[j] * direction;
		o.symbols[static_cast<std::size_t>(j)] = t < 0 ? Tilt::left : t > 0 ? Tilt::right : Tilt::balanced;
	}
	return o;
}

Decoder::Decoder(const Scheme& s) : scheme_(&s), info_(variant_info(s.variant()))
{
	for (int i = 1; i <= s.n(); ++i)
	{
		by_code_[s.coin(i).code()].push_back(i);
		has_zero_coin_ = has_zero_coin_ || s.coin(i).is_zero();
	}
}

Answer Decoder::decode(const Outcome& o, std::optional<Sign> known_comparison) const
{
	const int k = scheme_->k();
	if (o.size() != k)
	{
		throw std::invalid_argument("outcome length " + std::to_string(o.size()) + " does not match k=" +
		                            std::to_string(k));
	}
	if (info_.weight_known && known_comparison != Sign::heavier && known_comparison != Sign::lighter)
	{
		throw std::invalid_argument(to_string(info_.id) + " decoding needs the known weight comparison");
	}

	std::vector<std::int8_t> pattern(static_cast<std::size_t>(k));
	for (int j = 0; j < k; ++j)
	{
		const auto t = o.symbols[static_cast<std::size_t>(j)];
		pattern[static_cast<std::size_t>(j)] = t == Tilt::left ? -1 : t == Tilt::right ? 1 : 0;
	}
	const TernaryVector heavy_pattern(std::move(pattern));

	if (!info_.existence_known && heavy_pattern.is_zero() && !has_zero_coin_)
	{
		return {0, Sign::none};
	}

	struct Candidate
	{
		int coin;
		Sign sign;
	};
	std::vector<Candidate> candidates;
	auto collect = [&](const TernaryVector& v, Sign sign) {
		if (info_.weight_known && known_comparison != sign)
		{
			return;
		}
		if (auto it = by_code_.find(v.code()); it != by_code_.end())
		{
			for (int coin : it->second)
			{
				candidates.push_back({coin, sign});
			}
		}
	};
	collect(heavy_pattern, Sign::heavier);
	collect(negate(heavy_pattern), Sign::lighter);

	if (candidates.empty())
	{
		throw DecodeError(DecodeError::Kind::unreachable,
		                  "outcome " + format_outcome(o) + " cannot arise from any configuration");
	}
	const int coin = candidates.front().coin;
	const bool single_coin =
	    std::all_of(candidates.begin(), candidates.end(), [coin](const Candidate& c) { return c.coin == coin; });
	if (!single_coin)
	{
		throw DecodeError(DecodeError::Kind::ambiguous,
		                  "outcome " + format_outcome(o) + " matches more than one coin");
	}
	if (candidates.size() == 1)
	{
		return {coin, candidates.front().sign};
	}
	if (info_.sign_required)
	{
		throw DecodeError(DecodeError::Kind::ambiguous,
		                  "outcome " + format_outcome(o) + " leaves the sign of coin " + std::to_string(coin) +
		                      " undetermined");
	}
	return {coin, Sign::unknown};
}

Answer decode(const Scheme& s, const Outcome& o, std::optional<Sign> known_comparison)
{
	return Decoder(s).decode(o, known_comparison);
}

} // namespace coinweigh
