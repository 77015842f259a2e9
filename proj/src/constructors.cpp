#include "coinweigh/constructors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <tuple>

#include "coinweigh/appendix.hpp"
#include "coinweigh/bounds.hpp"

namespace coinweigh {

namespace {

using Vectors = std::vector<TernaryVector>;

int b7(int k) { return static_cast<int>(bound(VariantId::P7, k)); }
int b8(int k) { return static_cast<int>(bound(VariantId::P8, k)); }

[[noreturn]] void out_of_range(const char* what, int n, int k)
{
	throw ConstructionError(std::string(what) + ": no construction for n=" + std::to_string(n) +
	                        " k=" + std::to_string(k));
}

TernaryVector unit(int k, int j, int value)
{
	std::vector<std::int8_t> e(static_cast<std::size_t>(k), 0);
	e[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(value);
	return TernaryVector(std::move(e));
}

Vectors append_all(const Vectors& vs, int suffix)
{
	Vectors out;
	out.reserve(vs.size());
	const TernaryVector tail{suffix};
	for (const auto& v : vs)
	{
		out.push_back(concat(v, tail));
	}
	return out;
}

Vectors without_zero(const Vectors& vs)
{
	Vectors out;
	std::copy_if(vs.begin(), vs.end(), std::back_inserter(out), [](const TernaryVector& v) { return !v.is_zero(); });
	return out;
}

// Recursive constructions call each other with overlapping arguments; results
// are immutable, so a process-wide cache is safe.
template <typename Build>
Vectors cached(char family, int n, int k, Build&& build)
{
	static std::mutex mutex;
	static std::map<std::tuple<char, int, int>, Vectors> cache;
	const auto key = std::make_tuple(family, n, k);
	{
		std::lock_guard lock(mutex);
		if (auto it = cache.find(key); it != cache.end())
		{
			return it->second;
		}
	}
	Vectors result = build();
	std::lock_guard lock(mutex);
	return cache.emplace(key, std::move(result)).first->second;
}

ConditionSet p8_construction_conditions()
{
	return required_conditions(VariantId::P8, ConditionRole::construction);
}

// S8(n', k-2) x {-1,0,1}^2 with the zero prefix left out.
Vectors p8_core(int k)
{
	const auto block = concatenation_block(k);
	const auto zero_prefix = TernaryVector::zeros(k - 2);
	Vectors core;
	std::copy_if(block.begin(), block.end(), std::back_inserter(core), [&](const TernaryVector& v) {
		return !std::equal(zero_prefix.entries().begin(), zero_prefix.entries().end(), v.entries().begin());
	});
	return core;
}

// Picks one member from `size` of the opposite pairs of {-1,0,1}^m so that
// the picks sum to `target`. Omitted pairs are chosen first (lexicographic
// order of pair representatives), then signs by depth-first search.
class SignedSubsetSearch
{
public:
	SignedSubsetSearch(int m, int size, std::vector<int> target, std::uint64_t budget)
		: m_(m), size_(size), target_(std::move(target)), budget_(budget)
	{
		const auto total = pow3(m);
		for (std::uint64_t c = 0; c < (total - 1) / 2; ++c)
		{
			reps_.push_back(TernaryVector::from_code(c, m));
		}
	}

	std::optional<Vectors> run()
	{
		const int pairs = static_cast<int>(reps_.size());
		const int omit = pairs - size_;
		if (omit < 0)
		{
			return std::nullopt;
		}
		std::vector<int> omitted;
		return choose_omitted(0, omit, omitted);
	}

private:
	std::optional<Vectors> choose_omitted(int from, int remaining, std::vector<int>& omitted)
	{
		if (remaining == 0)
		{
			return solve(omitted);
		}
		for (int p = from; p < static_cast<int>(reps_.size()); ++p)
		{
			omitted.push_back(p);
			if (auto r = choose_omitted(p + 1, remaining - 1, omitted))
			{
				return r;
			}
			omitted.pop_back();
		}
		return std::nullopt;
	}

	std::optional<Vectors> solve(const std::vector<int>& omitted)
	{
		chosen_.clear();
		for (int p = 0; p < static_cast<int>(reps_.size()); ++p)
		{
			if (std::find(omitted.begin(), omitted.end(), p) == omitted.end())
			{
				chosen_.push_back(p);
			}
		}
		// remaining_[i][j]: picks at positions >= i with a nonzero entry j.
		remaining_.assign(chosen_.size() + 1, std::vector<int>(static_cast<std::size_t>(m_), 0));
		for (int i = static_cast<int>(chosen_.size()) - 1; i >= 0; --i)
		{
			for (int j = 0; j < m_; ++j)
			{
				remaining_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
				    remaining_[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j)] +
				    (reps_[static_cast<std::size_t>(chosen_[static_cast<std::size_t>(i)])][j] != 0 ? 1 : 0);
			}
		}
		if (!reachable(0, std::vector<int>(static_cast<std::size_t>(m_), 0)))
		{
			return std::nullopt;
		}
		signs_.assign(chosen_.size(), 1);
		std::vector<int> partial(static_cast<std::size_t>(m_), 0);
		if (!dfs(0, partial))
		{
			return std::nullopt;
		}
		Vectors out;
		for (std::size_t i = 0; i < chosen_.size(); ++i)
		{
			const auto& rep = reps_[static_cast<std::size_t>(chosen_[i])];
			out.push_back(signs_[i] > 0 ? rep : negate(rep));
		}
		std::sort(out.begin(), out.end());
		return out;
	}

	bool reachable(std::size_t i, const std::vector<int>& partial) const
	{
		for (int j = 0; j < m_; ++j)
		{
			const int gap = std::abs(target_[static_cast<std::size_t>(j)] - partial[static_cast<std::size_t>(j)]);
			const int room = remaining_[i][static_cast<std::size_t>(j)];
			if (gap > room || (room - gap) % 2 != 0)
			{
				return false;
			}
		}
		return true;
	}

	bool dfs(std::size_t i, std::vector<int>& partial)
	{
		if (++nodes_ > budget_)
		{
			throw ConstructionError("signed subset search exceeded its budget");
		}
		if (i == chosen_.size())
		{
			return partial == target_;
		}
		const auto& rep = reps_[static_cast<std::size_t>(chosen_[i])];
		// Try the sign that moves the partial sum toward the target first.
		int toward = 0;
		for (int j = 0; j < m_; ++j)
		{
			toward += rep[j] * (target_[static_cast<std::size_t>(j)] - partial[static_cast<std::size_t>(j)]);
		}
		const std::array<int, 2> order = toward >= 0 ? std::array<int, 2>{1, -1} : std::array<int, 2>{-1, 1};
		for (int sign : order)
		{
			for (int j = 0; j < m_; ++j)
			{
				partial[static_cast<std::size_t>(j)] += sign * rep[j];
			}
			if (reachable(i + 1, partial))
			{
				signs_[i] = sign;
				if (dfs(i + 1, partial))
				{
					return true;
				}
			}
			for (int j = 0; j < m_; ++j)
			{
				partial[static_cast<std::size_t>(j)] -= sign * rep[j];
			}
		}
		return false;
	}

	int m_;
	int size_;
	std::vector<int> target_;
	std::uint64_t budget_;
	std::uint64_t nodes_ = 0;
	Vectors reps_;
	std::vector<int> chosen_;
	std::vector<int> signs_;
	std::vector<std::vector<int>> remaining_;
};

} // namespace

ConditionSet required_conditions(VariantId variant, ConditionRole role)
{
	ConditionSet cs;
	cs.balanced = true;
	cs.distinct = true;
	switch (construction_base(variant))
	{
	case VariantId::P2: break;
	case VariantId::P4: cs.zero_free = true; break;
	case VariantId::P6:
	case VariantId::P8: cs.opposite_free = true; break;
	case VariantId::P5:
	case VariantId::P7:
		cs.opposite_free = true;
		cs.zero_free = true;
		break;
	default: throw std::logic_error("unexpected construction base");
	}
	const auto base = construction_base(variant);
	if (role == ConditionRole::construction && (base == VariantId::P7 || base == VariantId::P8))
	{
		cs.all_ones_free = true;
	}
	return cs;
}

VariantId construction_base(VariantId variant)
{
	switch (variant)
	{
	case VariantId::P1: return VariantId::P2;
	case VariantId::P3: return VariantId::P4;
	case VariantId::P9:
	case VariantId::P10: return VariantId::P5;
	case VariantId::P11:
	case VariantId::P12: return VariantId::P7;
	default: return variant;
	}
}

std::vector<TernaryVector> construct_p2(int n, int k)
{
	if (n < 1 || k < 0 || static_cast<std::uint64_t>(n) > pow3(k))
	{
		out_of_range("construct_p2", n, k);
	}
	const auto last = pow3(k) - 1;
	Vectors out;
	out.reserve(static_cast<std::size_t>(n));
	for (std::uint64_t c = 0; static_cast<int>(out.size()) + 1 < n; ++c)
	{
		out.push_back(TernaryVector::from_code(c, k));
		out.push_back(TernaryVector::from_code(last - c, k));
	}
	if (n % 2 == 1)
	{
		out.push_back(TernaryVector::zeros(k));
	}
	return out;
}

std::array<TernaryVector, 3> p4_seed(int k)
{
	if (k < 2)
	{
		throw std::invalid_argument("p4_seed needs k >= 2");
	}
	const auto pad = TernaryVector::zeros(k - 2);
	return {concat(TernaryVector{-1, 1}, pad), concat(TernaryVector{0, -1}, pad), concat(TernaryVector{1, 0}, pad)};
}

std::vector<TernaryVector> construct_p4(int n, int k)
{
	if (n < 2 || k < 1 || static_cast<std::uint64_t>(n) > pow3(k) - 1 || static_cast<std::uint64_t>(n) == pow3(k) - 2)
	{
		out_of_range("construct_p4", n, k);
	}
	if (n % 2 == 0)
	{
		return construct_p2(n, k);
	}
	if (k < 2 || static_cast<std::uint64_t>(n) > pow3(k) - 4)
	{
		out_of_range("construct_p4", n, k);
	}
	const auto seed = p4_seed(k);
	Vectors out(seed.begin(), seed.end());
	const auto last = pow3(k) - 1;
	auto touches_seed = [&](const TernaryVector& v) {
		return std::any_of(seed.begin(), seed.end(), [&](const TernaryVector& a) { return a == v || negate(a) == v; });
	};
	for (std::uint64_t c = 0; static_cast<int>(out.size()) < n; ++c)
	{
		auto v = TernaryVector::from_code(c, k);
		if (touches_seed(v))
		{
			continue;
		}
		out.push_back(std::move(v));
		out.push_back(TernaryVector::from_code(last - c, k));
	}
	return out;
}

CoinSet construct_p3(int n, int k)
{
	if (n < 1 || k < 1 || static_cast<std::uint64_t>(n) > pow3(k) - 1)
	{
		out_of_range("construct_p3", n, k);
	}
	if (static_cast<std::uint64_t>(n) == pow3(k) - 2)
	{
		// Every nonzero vector except 1^k; the genuine coin takes 1^k and
		// restores the balance.
		auto coins = construct_p2(n + 2, k);
		coins.pop_back(); // 0^k
		coins.erase(std::find(coins.begin(), coins.end(), TernaryVector::ones(k)));
		return {std::move(coins), TernaryVector::ones(k)};
	}
	if (n == 1)
	{
		return {{unit(k, 0, -1)}, unit(k, 0, 1)};
	}
	return {construct_p4(n, k), TernaryVector::zeros(k)};
}

std::array<TernaryVector, 4> literal_extension_vectors(int k)
{
	if (k < 2)
	{
		throw std::invalid_argument("extension vectors need k >= 2");
	}
	const auto lo = TernaryVector::minus_ones(k - 2);
	const auto hi = TernaryVector::ones(k - 2);
	return {concat(lo, TernaryVector{-1, 0}), concat(lo, TernaryVector{1, 1}), concat(hi, TernaryVector{-1, 0}),
	        concat(hi, TernaryVector{0, 0})};
}

std::vector<TernaryVector> concatenation_block(int k)
{
	if (k < 4)
	{
		throw std::invalid_argument("concatenation block needs k >= 4");
	}
	const auto inner = construct_p8(b8(k - 2), k - 2);
	const auto tails = all_vectors(2);
	Vectors block;
	block.reserve(inner.size() * tails.size());
	for (const auto& v : inner)
	{
		for (const auto& w : tails)
		{
			block.push_back(concat(v, w));
		}
	}
	return block;
}

std::vector<TernaryVector> extension_vectors(int k)
{
	if (k < 4)
	{
		throw std::invalid_argument("extension vectors need k >= 4");
	}
	return cached('e', 0, k, [&]() -> Vectors {
		const auto zero = TernaryVector::zeros(k - 2);
		const auto one = TernaryVector::ones(k - 2);
		const auto minus_one = TernaryVector::minus_ones(k - 2);

		// One member of each opposite pair 0^{k-2}w / 0^{k-2}(-w), and of each
		// pair 1^{k-2}w / (-1)^{k-2}(-w) except w = (1,1).
		Vectors zero_tails;
		Vectors one_tails;
		for (const auto& w : all_vectors(2))
		{
			if (w.code() < 4)
			{
				zero_tails.push_back(w);
			}
			if (w != TernaryVector{1, 1})
			{
				one_tails.push_back(w);
			}
		}
		// Sign preferences that reproduce three of the literal vectors.
		const std::map<TernaryVector, int> preferred{
		    {TernaryVector{1, 0}, -1}, {TernaryVector{-1, -1}, -1}, {TernaryVector{0, 0}, 1}};

		const int slots = static_cast<int>(zero_tails.size() + one_tails.size());
		auto assemble = [&](unsigned mask) {
			Vectors out{TernaryVector::zeros(k)};
			int bit = 0;
			for (const auto& w : zero_tails)
			{
				out.push_back(concat(zero, (mask >> bit++) & 1U ? negate(w) : w));
			}
			for (const auto& w : one_tails)
			{
				out.push_back((mask >> bit++) & 1U ? concat(minus_one, negate(w)) : concat(one, w));
			}
			return out;
		};
		auto honours_preferences = [&](unsigned mask) {
			for (std::size_t i = 0; i < one_tails.size(); ++i)
			{
				auto it = preferred.find(one_tails[i]);
				const bool flipped = (mask >> (zero_tails.size() + i)) & 1U;
				if (it != preferred.end() && flipped != (it->second < 0))
				{
					return false;
				}
			}
			return true;
		};

		const auto core = p8_core(k);
		for (bool strict : {true, false})
		{
			for (unsigned mask = 0; mask < (1U << slots); ++mask)
			{
				if (strict && !honours_preferences(mask))
				{
					continue;
				}
				auto ext = assemble(mask);
				const auto sum = vector_sum(ext, k);
				if (std::any_of(sum.begin(), sum.end(), [](int x) { return x != 0; }))
				{
					continue;
				}
				Vectors full = core;
				full.insert(full.end(), ext.begin(), ext.end());
				if (check_conditions(Scheme(VariantId::P8, k, std::move(full)), p8_construction_conditions()).passed)
				{
					return ext;
				}
			}
		}
		throw ConstructionError("no balanced extension vectors for k=" + std::to_string(k));
	});
}

std::vector<TernaryVector> construct_p8(int n, int k)
{
	if (k < 0 || n < 1)
	{
		out_of_range("construct_p8", n, k);
	}
	if (n == 1)
	{
		return {TernaryVector::zeros(k)};
	}
	if (n >= 3 && n <= b7(k))
	{
		return construct_p7(n, k);
	}
	if (k < 2 || n != b8(k))
	{
		out_of_range("construct_p8", n, k);
	}
	return cached('8', n, k, [&]() -> Vectors {
		if (auto base = base_set(VariantId::P8, n, k))
		{
			return *base;
		}
		auto set = p8_core(k);
		const auto ext = extension_vectors(k);
		set.insert(set.end(), ext.begin(), ext.end());
		return set;
	});
}

std::optional<std::pair<int, int>> choose_h_l(int n, int k)
{
	if (k < 4 || n < b8(k - 1) || n >= b7(k))
	{
		throw std::invalid_argument("choose_h_l: n=" + std::to_string(n) + " k=" + std::to_string(k) +
		                            " outside the split range");
	}
	const int cap = b7(k - 1);
	for (int l = 4; l <= cap; ++l)
	{
		if ((n - l) % 2 != 0 || l == 11)
		{
			continue;
		}
		const int h = (n - l) / 2;
		if (h >= 4 && h <= cap && h != 11)
		{
			return std::make_pair(h, l);
		}
	}
	return std::nullopt;
}

std::vector<TernaryVector> construct_p7_residual(int n, int k)
{
	if (k < 4 || n <= 2 * b8(k - 1) || n >= b7(k))
	{
		out_of_range("construct_p7_residual", n, k);
	}
	return cached('r', n, k, [&]() -> Vectors {
		const int m = k - 1;
		auto high = without_zero(construct_p8(b8(m), m));
		high.push_back(TernaryVector::ones(m));
		const int low_size = n - 2 * static_cast<int>(high.size());

		SignedSubsetSearch search(m, low_size, std::vector<int>(static_cast<std::size_t>(m), -2), 50'000'000);
		auto low = search.run();
		if (!low)
		{
			throw ConstructionError("construct_p7_residual: no low block for n=" + std::to_string(n) +
			                        " k=" + std::to_string(k));
		}

		auto out = append_all(high, -1);
		const auto plus = append_all(high, 1);
		const auto zero = append_all(*low, 0);
		out.insert(out.end(), plus.begin(), plus.end());
		out.insert(out.end(), zero.begin(), zero.end());

		// 1^{k-1} in H puts 1^k in the set, so only the correctness conditions hold.
		const auto report = check_conditions(Scheme(VariantId::P7, k, out),
		                                     required_conditions(VariantId::P7, ConditionRole::correctness));
		if (!report.passed)
		{
			throw ConstructionError("construct_p7_residual: certification failed\n" + format_report(report));
		}
		return out;
	});
}

std::vector<TernaryVector> construct_p7(int n, int k)
{
	if (n < 3 || k < 2 || n > b7(k))
	{
		out_of_range("construct_p7", n, k);
	}
	if (k <= 3)
	{
		auto base = base_set(VariantId::P7, n, k);
		if (!base)
		{
			out_of_range("construct_p7", n, k);
		}
		return *base;
	}
	return cached('7', n, k, [&]() -> Vectors {
		if (n <= b7(k - 1))
		{
			return append_all(construct_p7(n, k - 1), 0);
		}
		if (n == b7(k))
		{
			return without_zero(construct_p8(n + 1, k));
		}
		const auto split = choose_h_l(n, k);
		if (!split)
		{
			return construct_p7_residual(n, k);
		}
		const auto [h, l] = *split;
		const auto high = construct_p7(h, k - 1);
		auto out = append_all(high, -1);
		const auto plus = append_all(high, 1);
		const auto zero = append_all(construct_p7(l, k - 1), 0);
		out.insert(out.end(), plus.begin(), plus.end());
		out.insert(out.end(), zero.begin(), zero.end());
		return out;
	});
}

CoinSet construct_p5(int n, int k)
{
	if (n < 1 || k < 1 || n > static_cast<int>(bound(VariantId::P5, k)))
	{
		out_of_range("construct_p5", n, k);
	}
	if (n == 1)
	{
		return {{unit(k, 0, -1)}, unit(k, 0, 1)};
	}
	if (n == 2)
	{
		// Each coin against the genuine one in its own trial.
		return {{unit(k, 0, -1), unit(k, 1, -1)}, concat(TernaryVector{1, 1}, TernaryVector::zeros(k - 2))};
	}
	if (n <= b7(k))
	{
		return {construct_p7(n, k), TernaryVector::zeros(k)};
	}
	// n = (3^k - 1) / 2: the P6 set for n + 1 without its 0^k coin.
	auto coins = without_zero(construct_p8(n, k));
	coins.push_back(TernaryVector::minus_ones(k));
	return {std::move(coins), TernaryVector::ones(k)};
}

CoinSet construct_p6(int n, int k)
{
	if (n < 1 || k < 0 || n > static_cast<int>(bound(VariantId::P6, k)))
	{
		out_of_range("construct_p6", n, k);
	}
	if (n == 1)
	{
		if (k == 0)
		{
			return {{TernaryVector::zeros(0)}, TernaryVector::zeros(0)};
		}
		return {{unit(k, 0, -1)}, unit(k, 0, 1)};
	}
	if (n == 2)
	{
		return {{unit(k, 0, -1), TernaryVector::zeros(k)}, unit(k, 0, 1)};
	}
	if (n <= b7(k))
	{
		return {construct_p7(n, k), TernaryVector::zeros(k)};
	}
	if (n == b8(k))
	{
		return {construct_p8(n, k), TernaryVector::zeros(k)};
	}
	auto coins = construct_p8(n - 1, k);
	coins.push_back(TernaryVector::minus_ones(k));
	return {std::move(coins), TernaryVector::ones(k)};
}

Scheme construct(VariantId variant, int n, int k)
{
	const auto status = is_solvable(variant, n, k);
	if (status == Solvability::unsolvable)
	{
		const auto b = bound(variant, k);
		throw ConstructionError(to_string(variant) + " with n=" + std::to_string(n) + " k=" + std::to_string(k) +
		                        " is unsolvable" +
		                        (n > b ? " (" + std::to_string(n) + " > " + std::to_string(b) + ")"
		                               : " (too few coins to compare)"));
	}
	if (status == Solvability::adaptive_only)
	{
		throw ConstructionError(to_string(variant) + " with n=" + std::to_string(n) + " k=" + std::to_string(k) +
		                        " has no non-adaptive solution; use the adaptive tree");
	}

	CoinSet set;
	switch (variant)
	{
	case VariantId::P1: set = {construct_p2(n, k), TernaryVector::zeros(k)}; break;
	case VariantId::P2: set.coins = construct_p2(n, k); break;
	case VariantId::P3: set = construct_p3(n, k); break;
	case VariantId::P4: set.coins = construct_p4(n, k); break;
	case VariantId::P5:
	case VariantId::P9:
	case VariantId::P10: set = construct_p5(n, k); break;
	case VariantId::P6: set = construct_p6(n, k); break;
	case VariantId::P7:
	case VariantId::P11:
	case VariantId::P12: set.coins = construct_p7(n, k); break;
	case VariantId::P8: set.coins = construct_p8(n, k); break;
	}
	return Scheme(variant, k, std::move(set.coins), std::move(set.genuine));
}

} // namespace coinweigh
