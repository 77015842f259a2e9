#include <algorithm>
#include <unordered_map>

#include "coinweigh/adaptive.hpp"

namespace coinweigh {

std::string to_string(Feasibility f)
{
	switch (f)
	{
	case Feasibility::feasible: return "feasible";
	case Feasibility::infeasible: return "infeasible";
	case Feasibility::budget_exceeded: return "budget_exceeded";
	}
	return "?";
}

namespace {

// Knowledge about the coins, up to relabeling: `both` may be heavy or light,
// `heavy` can only be heavy, `light` can only be light, `genuine` are known good.
struct ClassCounts
{
	int both = 0;
	int heavy = 0;
	int light = 0;
	int genuine = 0;
	bool none_possible = false;

	int suspects() const { return both + heavy + light; }
};

struct BudgetExceeded
{
};

class GameSearch
{
public:
	GameSearch(bool sign_required, std::uint64_t budget) : sign_required_(sign_required), budget_(budget) {}

	bool solvable(ClassCounts s, int k)
	{
		s = canonical(s);
		if (solved(s))
		{
			return true;
		}
		if (k == 0 || !enough_outcomes(s, k))
		{
			return false;
		}
		const auto key = encode(s, k);
		if (auto it = memo_.find(key); it != memo_.end())
		{
			return it->second;
		}
		if (memo_.size() >= budget_)
		{
			throw BudgetExceeded{};
		}
		const bool result = any_move_works(s, k);
		memo_.emplace(key, result);
		return result;
	}

	std::uint64_t states() const { return memo_.size(); }

private:
	static ClassCounts canonical(ClassCounts s)
	{
		// Mirror symmetry: swapping heavy and light changes nothing essential.
		if (s.light > s.heavy)
		{
			std::swap(s.light, s.heavy);
		}
		// Genuine coins only ever fill the gap between pans.
		s.genuine = std::min(s.genuine, s.suspects());
		return s;
	}

	bool solved(const ClassCounts& s) const
	{
		if (sign_required_)
		{
			return 2 * s.both + s.heavy + s.light + (s.none_possible ? 1 : 0) <= 1;
		}
		return s.suspects() + (s.none_possible ? 1 : 0) <= 1;
	}

	bool enough_outcomes(const ClassCounts& s, int k) const
	{
		const auto outcomes = pow3(k);
		const std::uint64_t needed = sign_required_
		                                 ? static_cast<std::uint64_t>(2 * s.both + s.heavy + s.light + (s.none_possible ? 1 : 0))
		                                 : static_cast<std::uint64_t>(s.suspects() + (s.none_possible ? 1 : 0));
		return needed <= outcomes;
	}

	static std::uint64_t encode(const ClassCounts& s, int k)
	{
		auto key = static_cast<std::uint64_t>(k);
		for (int v : {s.both, s.heavy, s.light, s.genuine})
		{
			key = key * 4096 + static_cast<std::uint64_t>(v);
		}
		return key * 2 + (s.none_possible ? 1 : 0);
	}

	bool any_move_works(const ClassCounts& s, int k)
	{
		// Pan contents (both, heavy, light) on each side; genuine coins make up
		// the difference. Swapping the pans mirrors every outcome, so only the
		// lexicographically larger left pan is tried.
		for (int b1 = 0; b1 <= s.both; ++b1)
			for (int b2 = 0; b1 + b2 <= s.both; ++b2)
				for (int h1 = 0; h1 <= s.heavy; ++h1)
					for (int h2 = 0; h1 + h2 <= s.heavy; ++h2)
						for (int l1 = 0; l1 <= s.light; ++l1)
							for (int l2 = 0; l1 + l2 <= s.light; ++l2)
							{
								const int weighed = b1 + b2 + h1 + h2 + l1 + l2;
								if (weighed == 0)
								{
									continue;
								}
								if (std::make_tuple(b1, h1, l1) < std::make_tuple(b2, h2, l2))
								{
									continue;
								}
								const int gap = std::abs((b1 + h1 + l1) - (b2 + h2 + l2));
								if (gap > s.genuine)
								{
									continue;
								}
								const int total = s.suspects() + s.genuine;

								// Left pan sinks: heavy on the left or light on the right.
								ClassCounts left_sinks;
								left_sinks.heavy = b1 + h1;
								left_sinks.light = b2 + l2;
								left_sinks.genuine = total - left_sinks.heavy - left_sinks.light;

								ClassCounts right_sinks;
								right_sinks.heavy = b2 + h2;
								right_sinks.light = b1 + l1;
								right_sinks.genuine = total - right_sinks.heavy - right_sinks.light;

								ClassCounts level;
								level.both = s.both - b1 - b2;
								level.heavy = s.heavy - h1 - h2;
								level.light = s.light - l1 - l2;
								level.genuine = s.genuine + weighed;
								level.none_possible = s.none_possible;

								if (solvable(level, k - 1) && solvable(left_sinks, k - 1) &&
								    solvable(right_sinks, k - 1))
								{
									return true;
								}
							}
		return false;
	}

	bool sign_required_;
	std::uint64_t budget_;
	std::unordered_map<std::uint64_t, bool> memo_;
};

} // namespace

FeasibilityResult adaptive_feasible(VariantId variant, int n, int k, std::optional<int> extra_genuine,
                                    std::uint64_t budget)
{
	if (n < 1 || k < 0 || n >= 4096)
	{
		throw std::invalid_argument("adaptive_feasible needs 1 <= n < 4096 and k >= 0");
	}
	const auto info = variant_info(variant);
	const int extras = extra_genuine.value_or(info.extra_coin ? 1 : 0);
	if (extras < 0 || (info.extra_coin && extras == 0) || (!info.extra_coin && extras != 0))
	{
		throw std::invalid_argument(to_string(variant) + (info.extra_coin ? " needs at least one extra genuine coin"
		                                                                  : " has no extra genuine coins"));
	}

	ClassCounts start;
	// With a known comparison every coin starts as "only heavy" (the lighter
	// case is its mirror image).
	(info.weight_known ? start.heavy : start.both) = n;
	start.genuine = extras;
	start.none_possible = !info.existence_known;

	GameSearch search(info.sign_required, budget);
	FeasibilityResult result;
	try
	{
		result.verdict = search.solvable(start, k) ? Feasibility::feasible : Feasibility::infeasible;
	}
	catch (const BudgetExceeded&)
	{
		result.verdict = Feasibility::budget_exceeded;
	}
	result.states = search.states();
	return result;
}

bool counting_bound_check(VariantId variant, int n, int k)
{
	const auto p = static_cast<std::int64_t>(pow3(k));
	const std::int64_t m = n;
	switch (variant)
	{
	case VariantId::P1:
	case VariantId::P2: return m <= p;
	case VariantId::P3:
	case VariantId::P4: return m + 1 <= p;
	case VariantId::P5: return 2 * m <= p;
	case VariantId::P9: return 2 * m + 1 <= p;
	// Only the all-balanced outcome can stand for both signs of one coin.
	case VariantId::P6: return 2 * m <= (p - 1) + 2;
	// ...and without a guaranteed counterfeit it already stands for "none".
	case VariantId::P10: return 2 * m <= p - 1;
	default: break;
	}

	// P7, P8, P11, P12: no reference coin. The first weighing puts l against l;
	// a tilt leaves 2l candidates of known sign, a balance leaves n - 2l coins
	// with genuine references and k - 1 trials.
	if (k == 0)
	{
		return variant == VariantId::P8 ? m <= 1 : m == 0;
	}
	const std::int64_t rest = p / 3;
	auto balanced_ok = [&](std::int64_t r) {
		switch (variant)
		{
		case VariantId::P7: return 2 * r <= rest;
		case VariantId::P8: return 2 * r <= rest + 1;
		case VariantId::P11: return 2 * r + 1 <= rest;
		default: return 2 * r <= rest - 1; // P12
		}
	};
	const bool global = variant == VariantId::P8 ? 2 * m <= p + 1 : 2 * m <= p;
	if (!global)
	{
		return false;
	}
	for (std::int64_t l = 0; 2 * l <= m; ++l)
	{
		if (2 * l <= rest && balanced_ok(m - 2 * l))
		{
			return true;
		}
	}
	return false;
}

} // namespace coinweigh
