// Hand-made base sets that seed the recursive P7/P8 constructions (k = 2, 3).

#ifndef COINWEIGH_APPENDIX_HPP
#define COINWEIGH_APPENDIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "coinweigh/core.hpp"

namespace coinweigh {

struct BaseSet
{
	VariantId variant; // P7 or P8
	int n;
	int k;
	std::vector<std::string> vectors; // l/n/r strings, in the order printed
};

/// All thirteen base sets: S8(4,2), S8(13,3), S7(3,2) and S7(n,3) for n = 3..12.
const std::vector<BaseSet>& base_sets();

std::optional<std::vector<TernaryVector>> base_set(VariantId variant, int n, int k);

/// File name used for the golden copy of a base set, e.g. "S7_11_3.scheme".
std::string base_set_filename(const BaseSet& b);

} // namespace coinweigh

#endif
