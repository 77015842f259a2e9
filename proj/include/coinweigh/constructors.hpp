// Deterministic non-adaptive scheme constructions for every variant.

#ifndef COINWEIGH_CONSTRUCTORS_HPP
#define COINWEIGH_CONSTRUCTORS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coinweigh/core.hpp"
#include "coinweigh/verifier.hpp"

namespace coinweigh {

class ConstructionError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

enum class ConditionRole { construction, correctness };

/// Conditions a coin set must satisfy. The construction role adds
/// all_ones_free for P7/P8 (and their subsumed variants), which the
/// recursive constructions rely on.
ConditionSet required_conditions(VariantId variant, ConditionRole role);

/// Variant whose construction and conditions serve `variant`:
/// P1 -> P2, P3 -> P4 (plus the genuine coin), P9/P10 -> P5, P11/P12 -> P7.
VariantId construction_base(VariantId variant);

/// Throws ConstructionError unless is_solvable(variant, n, k) is nonadaptive.
Scheme construct(VariantId variant, int n, int k);

// Coin sets; the genuine coin (when the variant has one) is returned separately.
struct CoinSet
{
	std::vector<TernaryVector> coins;
	std::optional<TernaryVector> genuine;
};

std::vector<TernaryVector> construct_p2(int n, int k);
std::vector<TernaryVector> construct_p4(int n, int k);
std::vector<TernaryVector> construct_p7(int n, int k);
std::vector<TernaryVector> construct_p8(int n, int k);
CoinSet construct_p3(int n, int k);
CoinSet construct_p5(int n, int k);
CoinSet construct_p6(int n, int k);

/// Three-vector seed for odd P4 sets: (-1,1)0^{k-2}, (0,-1)0^{k-2}, (1,0)0^{k-2}.
std::array<TernaryVector, 3> p4_seed(int k);

/// The four vectors appended to S8(n',k-2) x {-1,0,1}^2 as they are usually
/// written: (-1)^{k-2}(-1,0), (-1)^{k-2}(1,1), 1^{k-2}(-1,0), 1^{k-2}(0,0).
/// Their suffixes sum to (-1,1), so this set is not balanced.
std::array<TernaryVector, 4> literal_extension_vectors(int k);

/// S8(n',k-2) x {-1,0,1}^2 in order. Since S8(n',k-2) holds 0^{k-2}, this
/// block contains the four opposite pairs 0^{k-2}w, 0^{k-2}(-w).
std::vector<TernaryVector> concatenation_block(int k);

/// The 13 vectors of S8((3^k-1)/2, k) whose first k-2 entries are constant:
/// 0^k, one of each pair 0^{k-2}(+-w), and one of each pair 1^{k-2}w,
/// (-1)^{k-2}(-w) with w != (1,1). Signs come from a search that first keeps
/// three of the literal vectors; the completed set is certified by
/// check_conditions. construct_p8 is the block without its zero-prefix rows
/// followed by these.
std::vector<TernaryVector> extension_vectors(int k);

/// Split n = 2h + l for the middle range of the P7 recursion. Smallest l of the
/// right parity first; neither part may be 11; both in [4, B7(k-1)].
std::optional<std::pair<int, int>> choose_h_l(int n, int k);

/// P7 sets for 2*B8(k-1) < n < B7(k), k >= 4. Used where no (h, l) split fits:
/// n in {(3^k-7)/2, (3^k-5)/2}, and n = 35 at k = 4. The result contains 1^k;
/// for n = (3^k-5)/2 every P7 set contains 1^k or (-1)^k.
std::vector<TernaryVector> construct_p7_residual(int n, int k);

} // namespace coinweigh

#endif
