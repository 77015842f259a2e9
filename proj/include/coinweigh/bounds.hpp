// Largest solvable coin counts per variant and the solvability classifier.

#ifndef COINWEIGH_BOUNDS_HPP
#define COINWEIGH_BOUNDS_HPP

#include <cstdint>
#include <string>

#include "coinweigh/core.hpp"

namespace coinweigh {

enum class Solvability { nonadaptive, adaptive_only, unsolvable };

std::string to_string(Solvability s);

/// B_i(k): the largest n for which the variant can be solved in k trials.
/// May be negative (P7, P11 and P12 at k = 0).
std::int64_t bound(VariantId variant, int k);

/// Classifies (variant, n, k). Besides the bound, handles the small-n cases
/// where no weighing can separate the candidates:
///   P7, P11, P12: n <= 2 unsolvable
///   P8: n = 1 solvable with no weighing, n = 2 unsolvable
///   P4: n = 1 unsolvable
/// and P4 at n = 3^k - 2 (k >= 2), which only has adaptive solutions.
Solvability is_solvable(VariantId variant, int n, int k);

} // namespace coinweigh

#endif
