#include <algorithm>
#include <cstdlib>

#include "coinweigh/constructors.hpp"
#include "coinweigh/verifier.hpp"

namespace coinweigh {

std::string to_string(SearchStatus s)
{
	switch (s)
	{
	case SearchStatus::found: return "found";
	case SearchStatus::none: return "none";
	case SearchStatus::budget_exceeded: return "budget_exceeded";
	}
	return "?";
}

namespace {

struct BudgetExceeded
{
};

// Depth-first enumeration of coin sets in increasing lexicographic order.
// A set S and its negation -S are equally valid, so only sets whose largest
// code is at most N-1-code(smallest) are visited.
class SchemeSearch
{
public:
	SchemeSearch(int n, int k, ConditionSet conditions, bool genuine, std::uint64_t budget)
		: n_(n), k_(k), conditions_(conditions), genuine_(genuine), budget_(budget),
		  total_(pow3(k)), vectors_(all_vectors(k)), chosen_mask_(total_, false),
		  partial_(static_cast<std::size_t>(k), 0)
	{
	}

	std::optional<std::vector<TernaryVector>> run()
	{
		if (n_ == 0)
		{
			return accept() ? std::optional(std::vector<TernaryVector>{}) : std::nullopt;
		}
		if (dfs(0, total_ - 1))
		{
			std::vector<TernaryVector> out;
			for (auto c : chosen_)
			{
				out.push_back(vectors_[c]);
			}
			return out;
		}
		return std::nullopt;
	}

	std::uint64_t nodes() const { return nodes_; }

	// Genuine vector restoring balance for the chosen set.
	TernaryVector genuine_vector() const
	{
		std::vector<std::int8_t> g(static_cast<std::size_t>(k_), 0);
		if (conditions_.balanced)
		{
			for (int j = 0; j < k_; ++j)
			{
				g[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(-partial_[static_cast<std::size_t>(j)]);
			}
		}
		return TernaryVector(std::move(g));
	}

private:
	bool allowed(std::uint64_t code) const
	{
		const auto& v = vectors_[code];
		if (conditions_.zero_free && v.is_zero())
		{
			return false;
		}
		if (conditions_.all_ones_free && k_ > 0 && (v.is_constant(1) || v.is_constant(-1)))
		{
			return false;
		}
		if (conditions_.opposite_free && !v.is_zero() && chosen_mask_[total_ - 1 - code])
		{
			return false;
		}
		return true;
	}

	bool accept() const
	{
		if (!conditions_.balanced)
		{
			return true;
		}
		const int slack = genuine_ ? 1 : 0;
		return std::all_of(partial_.begin(), partial_.end(), [slack](int x) { return std::abs(x) <= slack; });
	}

	bool prunable(int remaining) const
	{
		if (!conditions_.balanced)
		{
			return false;
		}
		const int slack = genuine_ ? 1 : 0;
		return std::any_of(partial_.begin(), partial_.end(),
		                   [&](int x) { return std::abs(x) > remaining + slack; });
	}

	void push(std::uint64_t code)
	{
		chosen_.push_back(code);
		chosen_mask_[code] = true;
		for (int j = 0; j < k_; ++j)
		{
			partial_[static_cast<std::size_t>(j)] += vectors_[code][j];
		}
	}

	void pop()
	{
		const auto code = chosen_.back();
		chosen_.pop_back();
		chosen_mask_[code] = std::find(chosen_.begin(), chosen_.end(), code) != chosen_.end();
		for (int j = 0; j < k_; ++j)
		{
			partial_[static_cast<std::size_t>(j)] -= vectors_[code][j];
		}
	}

	bool dfs(std::uint64_t from, std::uint64_t limit)
	{
		if (++nodes_ > budget_)
		{
			throw BudgetExceeded{};
		}
		const int remaining = n_ - static_cast<int>(chosen_.size());
		if (remaining == 0)
		{
			return accept();
		}
		if (prunable(remaining))
		{
			return false;
		}
		for (std::uint64_t code = from; code <= limit; ++code)
		{
			if (conditions_.distinct && limit - code + 1 < static_cast<std::uint64_t>(remaining))
			{
				break;
			}
			if (!allowed(code))
			{
				continue;
			}
			const auto next_limit = chosen_.empty() ? total_ - 1 - code : limit;
			if (code > next_limit)
			{
				break;
			}
			push(code);
			if (dfs(conditions_.distinct ? code + 1 : code, next_limit))
			{
				return true;
			}
			pop();
		}
		return false;
	}

	int n_;
	int k_;
	ConditionSet conditions_;
	bool genuine_;
	std::uint64_t budget_;
	std::uint64_t total_;
	std::vector<TernaryVector> vectors_;
	std::vector<std::uint64_t> chosen_;
	std::vector<bool> chosen_mask_;
	std::vector<int> partial_;
	std::uint64_t nodes_ = 0;
};

} // namespace

SearchResult search_nonadaptive(VariantId variant, int n, int k, const ConditionSet& waive, std::uint64_t budget)
{
	if (n < 1 || k < 0 || k > 8)
	{
		throw std::invalid_argument("search_nonadaptive supports n >= 1 and 0 <= k <= 8");
	}
	const auto conditions = required_conditions(variant, ConditionRole::construction).without(waive);
	const bool genuine = variant_info(variant).extra_coin;
	SchemeSearch search(n, k, conditions, genuine, budget);
	SearchResult result;
	try
	{
		auto coins = search.run();
		result.nodes = search.nodes();
		if (!coins)
		{
			result.status = SearchStatus::none;
			return result;
		}
		std::optional<TernaryVector> g;
		if (genuine)
		{
			g = search.genuine_vector();
		}
		result.status = SearchStatus::found;
		result.scheme = Scheme(variant, k, std::move(*coins), std::move(g));
	}
	catch (const BudgetExceeded&)
	{
		result.status = SearchStatus::budget_exceeded;
		result.nodes = budget;
	}
	return result;
}

} // namespace coinweigh
