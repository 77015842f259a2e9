// Adaptive (decision-tree) solutions and the game-tree feasibility oracle.

#ifndef COINWEIGH_ADAPTIVE_HPP
#define COINWEIGH_ADAPTIVE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coinweigh/core.hpp"
#include "coinweigh/verifier.hpp"

namespace coinweigh {

/// Decision tree stored as an arena of nodes. Internal nodes hold a weighing
/// and one child per reading (l, b, r); leaves hold the answer, or nothing when
/// the path cannot occur.
///
/// Variants with a known weight comparison get one root per comparison, since
/// the pans chosen after a tilt depend on it. Coin ids are 1-based; id n+1 is
/// the extra genuine coin.
class AdaptiveTree
{
public:
	struct Node
	{
		Pans weighing;
		std::array<int, 3> children{-1, -1, -1}; // indexed by child_index(Tilt)
		bool leaf = false;
		std::optional<Answer> answer;            // leaves only; empty = contradictory readings
	};

	AdaptiveTree(VariantId variant, int n, int k);

	VariantId variant() const { return variant_; }
	int n() const { return n_; }
	int k() const { return k_; }

	int add_leaf(std::optional<Answer> answer);
	int add_weighing(Pans weighing, std::array<int, 3> children);
	const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
	std::size_t size() const { return nodes_.size(); }

	/// Root for the given known comparison (heavier or lighter); variants
	/// without one use a single root and ignore the argument.
	int root(Sign known = Sign::heavier) const;
	void set_root(int id, Sign known = Sign::heavier);

	static int child_index(Tilt t);

private:
	VariantId variant_;
	int n_;
	int k_;
	std::vector<Node> nodes_;
	std::array<int, 2> roots_{-1, -1};
};

/// The fallback for P3/P4 with n = 3^k - 2: weigh 3^{k-1} against 3^{k-1};
/// on a tilt, run the non-adaptive P2 scheme on the implicated pan; on balance,
/// recurse on the 3^{k-1} - 2 coins left out, finishing at k = 2 with the last
/// coin against a coin already shown to be genuine.
AdaptiveTree build_adaptive_p4(VariantId variant, int n, int k);

/// Non-adaptive scheme viewed as a tree of depth k; used for interactive sessions.
AdaptiveTree tree_from_scheme(const Scheme& s);

/// Walks the tree under configuration c. For variants with a known comparison
/// the root is chosen by c's sign. Throws std::runtime_error on a malformed
/// tree (too deep, missing child, contradictory leaf reached).
Answer simulate_adaptive(const AdaptiveTree& t, const Configuration& c);

/// Every admissible configuration walked through the tree (2n, plus one when
/// existence is unknown).
VerificationReport verify_exhaustive(const AdaptiveTree& t);

/// Nested text rendering, one weighing or answer per line.
std::string format_tree(const AdaptiveTree& t);

/// Step-by-step walk driven by externally supplied readings.
class AdaptiveSession
{
public:
	AdaptiveSession(const AdaptiveTree& tree, Sign known = Sign::heavier);

	bool finished() const;
	int round() const { return round_; }
	const Pans& current_weighing() const;
	/// Feeds the reading of the current weighing. Throws std::runtime_error
	/// naming the trial when the readings so far are contradictory.
	void feed(Tilt reading);
	const Answer& answer() const;

private:
	const AdaptiveTree* tree_;
	int node_;
	int round_ = 0;
};

// ---------------------------------------------------------------------------
// Game-tree feasibility

enum class Feasibility { feasible, infeasible, budget_exceeded };

std::string to_string(Feasibility f);

struct FeasibilityResult
{
	Feasibility verdict = Feasibility::infeasible;
	std::uint64_t states = 0;
};

inline constexpr std::uint64_t default_feasibility_budget = 5'000'000;

/// Whether some adaptive strategy solves every admissible configuration within
/// k trials. `extra_genuine` is the number of known-genuine coins available;
/// it defaults to 1 for variants with an extra coin and 0 otherwise, and must
/// be 0 for variants without one. Coins are tracked as counts per knowledge
/// class (may be heavy or light / only heavy / only light / genuine), with
/// memoization on the class counts. `budget` bounds the number of distinct
/// states explored.
FeasibilityResult adaptive_feasible(VariantId variant, int n, int k, std::optional<int> extra_genuine = std::nullopt,
                                    std::uint64_t budget = default_feasibility_budget);

/// Closed-form necessary conditions: configuration counting for every
/// variant, the balanced-outcome refinement for P6/P10, and the first-weighing
/// dilemma for P7, P8, P11 and P12. False means the instance is ruled out.
bool counting_bound_check(VariantId variant, int n, int k);

} // namespace coinweigh

#endif
