#include "coinweigh/bounds.hpp"

namespace coinweigh {

std::string to_string(Solvability s)
{
	switch (s)
	{
	case Solvability::nonadaptive: return "nonadaptive";
	case Solvability::adaptive_only: return "adaptive_only";
	case Solvability::unsolvable: return "unsolvable";
	}
	return "?";
}

std::int64_t bound(VariantId variant, int k)
{
	const auto p = static_cast<std::int64_t>(pow3(k));
	switch (variant)
	{
	case VariantId::P1:
	case VariantId::P2: return p;
	case VariantId::P3:
	case VariantId::P4: return p - 1;
	case VariantId::P5:
	case VariantId::P8:
	case VariantId::P9:
	case VariantId::P10: return (p - 1) / 2;
	case VariantId::P6: return (p + 1) / 2;
	case VariantId::P7:
	case VariantId::P11:
	case VariantId::P12: return (p - 3) / 2;
	}
	throw std::invalid_argument("unknown variant");
}

Solvability is_solvable(VariantId variant, int n, int k)
{
	if (n < 1 || k < 0)
	{
		throw std::invalid_argument("is_solvable needs n >= 1 and k >= 0");
	}
	switch (variant)
	{
	case VariantId::P7:
	case VariantId::P11:
	case VariantId::P12:
		if (n <= 2)
		{
			return Solvability::unsolvable;
		}
		break;
	case VariantId::P8:
		if (n == 1)
		{
			return Solvability::nonadaptive;
		}
		if (n == 2)
		{
			return Solvability::unsolvable;
		}
		break;
	case VariantId::P4:
		if (n == 1)
		{
			return Solvability::unsolvable;
		}
		break;
	default:
		break;
	}
	if (n > bound(variant, k))
	{
		return Solvability::unsolvable;
	}
	if (variant == VariantId::P4 && k >= 2 && static_cast<std::uint64_t>(n) == pow3(k) - 2)
	{
		return Solvability::adaptive_only;
	}
	return Solvability::nonadaptive;
}

} // namespace coinweigh
