#include <doctest.h>

#include "coinweigh/bounds.hpp"

using namespace coinweigh;

TEST_CASE("table values")
{
	CHECK(bound(VariantId::P6, 3) == 14);
	CHECK(bound(VariantId::P8, 2) == 4);
	CHECK(bound(VariantId::P2, 0) == 1);
	CHECK(bound(VariantId::P1, 3) == 27);
	CHECK(bound(VariantId::P4, 3) == 26);
	CHECK(bound(VariantId::P5, 3) == 13);
	CHECK(bound(VariantId::P7, 3) == 12);
	CHECK(bound(VariantId::P10, 4) == 40);
	CHECK(bound(VariantId::P12, 4) == 39);
}

TEST_CASE("solvability examples")
{
	CHECK(is_solvable(VariantId::P4, 7, 2) == Solvability::adaptive_only);
	CHECK(is_solvable(VariantId::P4, 25, 3) == Solvability::adaptive_only);
	CHECK(is_solvable(VariantId::P5, 14, 3) == Solvability::unsolvable);
	CHECK(is_solvable(VariantId::P5, 13, 3) == Solvability::nonadaptive);
	CHECK(is_solvable(VariantId::P7, 2, 3) == Solvability::unsolvable);
	CHECK(is_solvable(VariantId::P8, 1, 0) == Solvability::nonadaptive);
	CHECK(is_solvable(VariantId::P8, 2, 5) == Solvability::unsolvable);
	CHECK(is_solvable(VariantId::P4, 1, 3) == Solvability::unsolvable);
	CHECK(is_solvable(VariantId::P3, 1, 1) == Solvability::nonadaptive);
	CHECK(is_solvable(VariantId::P3, 7, 2) == Solvability::nonadaptive);
	CHECK(is_solvable(VariantId::P11, 2, 4) == Solvability::unsolvable);
}

TEST_CASE("adaptive_only occurs only for P4 at 3^k - 2")
{
	for (auto v : all_variants())
	{
		for (int k = 0; k <= 5; ++k)
		{
			for (int n = 1; n <= bound(v, k) + 1; ++n)
			{
				if (is_solvable(v, n, k) == Solvability::adaptive_only)
				{
					CHECK(v == VariantId::P4);
					CHECK(n == static_cast<int>(pow3(k)) - 2);
				}
			}
		}
	}
}

TEST_CASE("more trials never hurt")
{
	for (auto v : all_variants())
	{
		for (int k = 0; k <= 5; ++k)
		{
			for (int n = 1; n <= bound(v, k); ++n)
			{
				if (is_solvable(v, n, k) != Solvability::unsolvable)
				{
					CHECK(is_solvable(v, n, k + 1) != Solvability::unsolvable);
				}
			}
		}
	}
}

TEST_CASE("bound ordering")
{
	for (int k = 1; k <= 12; ++k)
	{
		CHECK(bound(VariantId::P7, k) <= bound(VariantId::P5, k));
		CHECK(bound(VariantId::P5, k) <= bound(VariantId::P6, k));
		CHECK(bound(VariantId::P6, k) <= bound(VariantId::P4, k));
		CHECK(bound(VariantId::P4, k) <= bound(VariantId::P2, k));
	}
}

TEST_CASE("just above the bound is unsolvable")
{
	for (auto v : all_variants())
	{
		// k = 0 is left out: P8 with one coin needs no trial though B8(0) = 0.
		for (int k = 1; k <= 8; ++k)
		{
			CHECK(is_solvable(v, static_cast<int>(bound(v, k)) + 1, k) == Solvability::unsolvable);
		}
	}
}
