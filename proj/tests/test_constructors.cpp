#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coinweigh/appendix.hpp"
#include "coinweigh/bounds.hpp"
#include "coinweigh/constructors.hpp"

using namespace coinweigh;

namespace {

using Vectors = std::vector<TernaryVector>;

Vectors lnr(std::initializer_list<const char*> strings)
{
	Vectors out;
	for (const auto* s : strings)
	{
		out.push_back(parse_lnr(s));
	}
	return out;
}

std::set<TernaryVector> as_set(const Vectors& vs)
{
	return {vs.begin(), vs.end()};
}

// Condition checks written out directly, without the library's checker.
struct Flags
{
	bool balanced = true;
	bool distinct = true;
	bool opposite_free = true;
	bool zero_free = true;
	bool all_ones_free = true;
};

Flags inspect(const Vectors& coins, const std::optional<TernaryVector>& genuine, int k)
{
	Flags f;
	for (int j = 0; j < k; ++j)
	{
		int sum = genuine ? (*genuine)[j] : 0;
		for (const auto& v : coins)
		{
			sum += v[j];
		}
		f.balanced = f.balanced && sum == 0;
	}
	for (std::size_t a = 0; a < coins.size(); ++a)
	{
		f.zero_free = f.zero_free && !coins[a].is_zero();
		f.all_ones_free = f.all_ones_free && !(k > 0 && (coins[a].is_constant(1) || coins[a].is_constant(-1)));
		for (std::size_t b = a + 1; b < coins.size(); ++b)
		{
			f.distinct = f.distinct && coins[a] != coins[b];
			f.opposite_free = f.opposite_free && coins[a] != negate(coins[b]);
		}
	}
	return f;
}

bool satisfies(const Flags& f, const ConditionSet& cs)
{
	return (!cs.balanced || f.balanced) && (!cs.distinct || f.distinct) && (!cs.opposite_free || f.opposite_free) &&
	       (!cs.zero_free || f.zero_free) && (!cs.all_ones_free || f.all_ones_free);
}

} // namespace

TEST_CASE("required conditions")
{
	using C = Condition;
	CHECK(required_conditions(VariantId::P2, ConditionRole::correctness) ==
	      ConditionSet{}.with(C::balanced).with(C::distinct));
	CHECK(required_conditions(VariantId::P8, ConditionRole::construction) ==
	      ConditionSet{}.with(C::balanced).with(C::distinct).with(C::opposite_free).with(C::all_ones_free));
	CHECK(required_conditions(VariantId::P7, ConditionRole::correctness) ==
	      ConditionSet{}.with(C::balanced).with(C::distinct).with(C::opposite_free).with(C::zero_free));
	CHECK(required_conditions(VariantId::P4, ConditionRole::correctness) ==
	      ConditionSet{}.with(C::balanced).with(C::distinct).with(C::zero_free));
	CHECK(required_conditions(VariantId::P6, ConditionRole::construction) ==
	      ConditionSet{}.with(C::balanced).with(C::distinct).with(C::opposite_free));
	CHECK(required_conditions(VariantId::P12, ConditionRole::correctness) ==
	      required_conditions(VariantId::P7, ConditionRole::correctness));
}

TEST_CASE("P2 and P4 sets")
{
	CHECK(as_set(construct_p2(9, 2)) == as_set(all_vectors(2)));
	CHECK(construct_p2(2, 1) == lnr({"l", "r"}));
	CHECK(construct_p2(1, 0) == Vectors{TernaryVector::zeros(0)});
	CHECK_THROWS_AS(construct_p2(10, 2), ConstructionError);

	CHECK(construct_p4(2, 1) == lnr({"l", "r"}));
	CHECK(as_set(construct_p4(3, 2)) == as_set(lnr({"lr", "nl", "rn"})));
	const auto seed = p4_seed(2);
	CHECK(std::vector<TernaryVector>(seed.begin(), seed.end()) == lnr({"lr", "nl", "rn"}));

	const auto five = construct_p4(5, 2);
	REQUIRE(five.size() == 5);
	std::set<TernaryVector> forbidden{TernaryVector::zeros(2)};
	for (const auto& a : seed)
	{
		forbidden.insert(a);
		forbidden.insert(negate(a));
	}
	const auto extra = std::vector<TernaryVector>(five.begin() + 3, five.end());
	CHECK(extra[0] == negate(extra[1]));
	CHECK(forbidden.count(extra[0]) == 0);
	CHECK(forbidden.count(extra[1]) == 0);

	CHECK_THROWS_AS(construct_p4(7, 2), ConstructionError);
	CHECK_THROWS_AS(construct_p4(1, 3), ConstructionError);
}

TEST_CASE("P8 base sets and recursion")
{
	CHECK(construct_p8(4, 2) == lnr({"nl", "lr", "rn", "nn"}));
	CHECK(construct_p8(13, 3) ==
	      lnr({"llr", "lnr", "lrl", "lrr", "nll", "nln", "nnl", "nrl", "rln", "rnn", "rnr", "rrn", "nnn"}));
	CHECK(construct_p8(1, 3) == Vectors{TernaryVector::zeros(3)});
	CHECK_THROWS_AS(construct_p8(2, 3), ConstructionError);
	CHECK_THROWS_AS(construct_p8(14, 3), ConstructionError);

	const auto forty = construct_p8(40, 4);
	CHECK(forty.size() == 40);
	// Everything outside the constant-prefix part is a concatenation v.w with
	// v a nonzero member of S8(4,2).
	std::set<TernaryVector> expected_core;
	for (const auto& v : construct_p8(4, 2))
	{
		if (!v.is_zero())
		{
			for (const auto& w : all_vectors(2))
			{
				expected_core.insert(concat(v, w));
			}
		}
	}
	const auto ext = extension_vectors(4);
	CHECK(ext.size() == 13);
	CHECK(as_set(Vectors(forty.begin(), forty.end() - 13)) == expected_core);
	CHECK(Vectors(forty.end() - 13, forty.end()) == ext);
}

TEST_CASE("S8 keeps 0^k and avoids +-1^k")
{
	for (int k = 2; k <= 6; ++k)
	{
		const auto s = construct_p8(static_cast<int>(bound(VariantId::P8, k)), k);
		CHECK(std::count(s.begin(), s.end(), TernaryVector::zeros(k)) == 1);
		CHECK(std::count(s.begin(), s.end(), TernaryVector::ones(k)) == 0);
		CHECK(std::count(s.begin(), s.end(), TernaryVector::minus_ones(k)) == 0);
		CHECK(satisfies(inspect(s, std::nullopt, k), required_conditions(VariantId::P8, ConditionRole::construction)));
	}
}

TEST_CASE("literal extension vectors leave residual (0..0,-1,1)")
{
	for (int k = 4; k <= 6; ++k)
	{
		const auto lit = literal_extension_vectors(k);
		auto sum = vector_sum(std::vector<TernaryVector>(lit.begin(), lit.end()), k);
		std::vector<int> expected(static_cast<std::size_t>(k), 0);
		expected[static_cast<std::size_t>(k - 2)] = -1;
		expected[static_cast<std::size_t>(k - 1)] = 1;
		CHECK(sum == expected);

		// The concatenation block is itself balanced, so the residual carries over.
		const auto block = concatenation_block(k);
		CHECK(vector_sum(block, k) == std::vector<int>(static_cast<std::size_t>(k), 0));
		auto with_literal = block;
		with_literal.insert(with_literal.end(), lit.begin(), lit.end());
		CHECK(vector_sum(with_literal, k) == expected);
	}
}

TEST_CASE("the concatenation block cannot be completed by any four vectors")
{
	// 0^{k-2}w and 0^{k-2}(-w) are both in the block, for each of four w.
	const auto block = concatenation_block(4);
	CHECK(block.size() == 36);
	CHECK_FALSE(inspect(block, std::nullopt, 4).opposite_free);
	int pairs = 0;
	const auto members = as_set(block);
	for (const auto& v : block)
	{
		pairs += members.count(negate(v)) && v < negate(v) ? 1 : 0;
	}
	CHECK(pairs == 4);

	// A candidate with the suffixes rearranged is balanced with the block; the opposite
	// pairs are still there.
	auto candidate = block;
	for (const auto* s : {"llln", "llrr", "rrnn", "rrnl"})
	{
		candidate.push_back(parse_lnr(s));
	}
	const auto f = inspect(candidate, std::nullopt, 4);
	CHECK(f.balanced);
	CHECK(f.all_ones_free);
	CHECK_FALSE(f.opposite_free);
}

TEST_CASE("extension vectors against every sign assignment")
{
	// Brute force over the 2^12 choices of one member per constant-prefix pair.
	for (int k = 4; k <= 5; ++k)
	{
		const auto zero = TernaryVector::zeros(k - 2);
		const auto one = TernaryVector::ones(k - 2);
		Vectors core;
		for (const auto& v : construct_p8(static_cast<int>(bound(VariantId::P8, k - 2)), k - 2))
		{
			if (!v.is_zero())
			{
				for (const auto& w : all_vectors(2))
				{
					core.push_back(concat(v, w));
				}
			}
		}
		Vectors zero_pairs;
		Vectors one_pairs;
		for (const auto& w : all_vectors(2))
		{
			if (!w.is_zero() && w < negate(w))
			{
				zero_pairs.push_back(concat(zero, w));
			}
			if (w != TernaryVector{1, 1})
			{
				one_pairs.push_back(concat(one, w));
			}
		}
		REQUIRE(zero_pairs.size() == 4);
		REQUIRE(one_pairs.size() == 8);

		std::set<std::set<TernaryVector>> valid;
		for (unsigned mask = 0; mask < 4096; ++mask)
		{
			Vectors ext{TernaryVector::zeros(k)};
			for (unsigned i = 0; i < 12; ++i)
			{
				const auto& v = i < 4 ? zero_pairs[i] : one_pairs[i - 4];
				ext.push_back((mask >> i) & 1U ? negate(v) : v);
			}
			auto full = core;
			full.insert(full.end(), ext.begin(), ext.end());
			const auto f = inspect(full, std::nullopt, k);
			if (f.balanced && f.distinct && f.opposite_free && f.all_ones_free)
			{
				valid.insert(as_set(ext));
			}
		}
		CHECK_FALSE(valid.empty());
		CHECK(valid.count(as_set(extension_vectors(k))) == 1);

		// Three of the literal vectors survive.
		const auto lit = literal_extension_vectors(k);
		const auto chosen = as_set(extension_vectors(k));
		CHECK(chosen.count(lit[0]) == 1);
		CHECK(chosen.count(lit[1]) == 1);
		CHECK(chosen.count(lit[3]) == 1);
		CHECK(chosen.count(lit[2]) == 0);
	}
}

TEST_CASE("choose_h_l matches an exhaustive search")
{
	CHECK(choose_h_l(13, 4) == std::make_pair(4, 5));
	for (int k = 4; k <= 7; ++k)
	{
		const int cap = static_cast<int>(bound(VariantId::P7, k - 1));
		for (int n = static_cast<int>(bound(VariantId::P8, k - 1)); n < bound(VariantId::P7, k); ++n)
		{
			std::optional<std::pair<int, int>> expected;
			for (int l = 4; l <= cap && !expected; ++l)
			{
				for (int h = 4; h <= cap; ++h)
				{
					if (2 * h + l == n && h != 11 && l != 11)
					{
						expected = std::make_pair(h, l);
						break;
					}
				}
			}
			const auto got = choose_h_l(n, k);
			CHECK(got == expected);
			if (got)
			{
				CHECK(2 * got->first + got->second == n);
			}
		}
	}
	CHECK_THROWS_AS(choose_h_l(12, 4), std::invalid_argument);
	CHECK_THROWS_AS(choose_h_l(39, 4), std::invalid_argument);
}

TEST_CASE("P7 sets")
{
	CHECK(construct_p7(3, 2) == lnr({"nl", "lr", "rn"}));
	const auto eleven = construct_p7(11, 3);
	CHECK(std::count(eleven.begin(), eleven.end(), parse_lnr("lll")) == 1);

	const auto thirteen = construct_p7(13, 4);
	Vectors expected;
	for (int tail : {-1, 1})
	{
		for (const auto& v : construct_p7(4, 3))
		{
			expected.push_back(concat(v, TernaryVector{tail}));
		}
	}
	for (const auto& v : construct_p7(5, 3))
	{
		expected.push_back(concat(v, TernaryVector{0}));
	}
	CHECK(thirteen == expected);

	// Below the previous bound: pad with a zero trial.
	CHECK(construct_p7(12, 4) == [] {
		Vectors out;
		for (const auto& v : construct_p7(12, 3))
		{
			out.push_back(concat(v, TernaryVector{0}));
		}
		return out;
	}());

	// Top of the range: S8 without 0^k.
	auto s8 = construct_p8(40, 4);
	s8.erase(std::find(s8.begin(), s8.end(), TernaryVector::zeros(4)));
	CHECK(construct_p7(39, 4) == s8);

	CHECK_THROWS_AS(construct_p7(2, 3), ConstructionError);
	CHECK_THROWS_AS(construct_p7(13, 3), ConstructionError);
}

TEST_CASE("P7 sizes without an (h, l) split")
{
	const auto correctness = required_conditions(VariantId::P7, ConditionRole::correctness);
	for (auto [n, k] : {std::pair{35, 4}, {37, 4}, {38, 4}, {118, 5}, {119, 5}})
	{
		CAPTURE(n);
		CHECK_FALSE(choose_h_l(n, k).has_value());
		const auto s = construct_p7(n, k);
		CHECK(static_cast<int>(s.size()) == n);
		CHECK(s == construct_p7_residual(n, k));
		CHECK(satisfies(inspect(s, std::nullopt, k), correctness));
	}
}

TEST_CASE("a P7 set of size (3^k-5)/2 always holds a constant vector")
{
	// Every coordinate is nonzero in an odd number of the non-constant pair
	// classes, so dropping one more class cannot leave a zero sum. Checked
	// exhaustively at k = 3.
	const int k = 3;
	Vectors reps;
	for (const auto& v : all_vectors(k))
	{
		if (!v.is_zero() && v < negate(v) && !v.is_constant(-1))
		{
			reps.push_back(v);
		}
	}
	REQUIRE(reps.size() == 12);
	int found = 0;
	for (std::size_t skip = 0; skip < reps.size(); ++skip)
	{
		for (unsigned mask = 0; mask < (1U << 11); ++mask)
		{
			std::vector<int> sum(k, 0);
			unsigned bit = 0;
			for (std::size_t i = 0; i < reps.size(); ++i)
			{
				if (i == skip)
				{
					continue;
				}
				const int s = (mask >> bit++) & 1U ? -1 : 1;
				for (int j = 0; j < k; ++j)
				{
					sum[static_cast<std::size_t>(j)] += s * reps[i][j];
				}
			}
			found += std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; }) ? 1 : 0;
		}
	}
	CHECK(found == 0);
}

TEST_CASE("P5 and P6 sets")
{
	const auto p6 = construct_p6(14, 3);
	auto expected = construct_p8(13, 3);
	expected.push_back(TernaryVector::minus_ones(3));
	CHECK(p6.coins == expected);
	CHECK(p6.genuine == TernaryVector::ones(3));

	const auto p6_13 = construct_p6(13, 3);
	CHECK(p6_13.coins == construct_p8(13, 3));
	CHECK(p6_13.genuine == TernaryVector::zeros(3));

	const auto p5 = construct_p5(13, 3);
	auto s8 = construct_p8(13, 3);
	s8.erase(std::find(s8.begin(), s8.end(), TernaryVector::zeros(3)));
	s8.push_back(TernaryVector::minus_ones(3));
	CHECK(as_set(p5.coins) == as_set(s8));
	CHECK(p5.genuine == TernaryVector::ones(3));

	const auto p5_12 = construct_p5(12, 3);
	CHECK(p5_12.coins == construct_p7(12, 3));
	CHECK(p5_12.genuine == TernaryVector::zeros(3));

	const auto one = construct_p5(1, 1);
	CHECK(one.coins == lnr({"l"}));
	CHECK(one.genuine == parse_lnr("r"));
	CHECK_THROWS_AS(construct_p5(14, 3), ConstructionError);
	CHECK_THROWS_AS(construct_p6(15, 3), ConstructionError);
}

TEST_CASE("subsumed variants reuse their base construction")
{
	CHECK(construct(VariantId::P12, 20, 4).coins() == construct(VariantId::P7, 20, 4).coins());
	CHECK(construct(VariantId::P11, 39, 4).coins() == construct(VariantId::P7, 39, 4).coins());
	CHECK(construct(VariantId::P9, 4, 2).coins() == construct(VariantId::P5, 4, 2).coins());
	CHECK(construct(VariantId::P9, 4, 2).genuine() == construct(VariantId::P5, 4, 2).genuine());
	CHECK(construct(VariantId::P10, 13, 3).coins() == construct(VariantId::P5, 13, 3).coins());
	CHECK(construct(VariantId::P1, 9, 2).coins() == construct(VariantId::P2, 9, 2).coins());
	CHECK(as_set(construct(VariantId::P1, 9, 2).coins()) == as_set(all_vectors(2)));
	CHECK(construct(VariantId::P3, 6, 2).coins() == construct(VariantId::P4, 6, 2).coins());
}

TEST_CASE("P3 at 3^k - 2 uses the genuine coin")
{
	for (int k = 1; k <= 4; ++k)
	{
		const int n = static_cast<int>(pow3(k)) - 2;
		const auto s = construct(VariantId::P3, n, k);
		CHECK(s.genuine() == TernaryVector::ones(k));
		CHECK(satisfies(inspect(s.coins(), s.genuine(), k),
		                required_conditions(VariantId::P3, ConditionRole::correctness)));
	}
}

TEST_CASE("every construction meets its conditions")
{
	for (auto v : all_variants())
	{
		const auto cs = required_conditions(v, ConditionRole::correctness);
		const bool existence_known = variant_info(v).existence_known;
		for (int k = 1; k <= 5; ++k)
		{
			for (int n = 1; n <= bound(v, k); ++n)
			{
				if (is_solvable(v, n, k) != Solvability::nonadaptive)
				{
					CHECK_THROWS_AS(construct(v, n, k), ConstructionError);
					continue;
				}
				const auto s = construct(v, n, k);
				CAPTURE(to_string(v));
				CAPTURE(n);
				CAPTURE(k);
				CHECK(s.n() == n);
				CHECK(satisfies(inspect(s.coins(), s.genuine(), k), cs));
				if (!existence_known)
				{
					CHECK(std::none_of(s.coins().begin(), s.coins().end(), [](const auto& c) { return c.is_zero(); }));
				}
			}
		}
	}
}

TEST_CASE("constructions are deterministic")
{
	for (auto v : all_variants())
	{
		const int n = static_cast<int>(bound(v, 4));
		if (is_solvable(v, n, 4) == Solvability::nonadaptive)
		{
			CHECK(construct(v, n, 4) == construct(v, n, 4));
		}
	}
	CHECK(extension_vectors(5) == extension_vectors(5));
}

TEST_CASE("appendix base sets are the constructor output")
{
	CHECK(base_sets().size() == 13);
	for (const auto& b : base_sets())
	{
		const auto vs = *base_set(b.variant, b.n, b.k);
		CHECK((b.variant == VariantId::P7 ? construct_p7(b.n, b.k) : construct_p8(b.n, b.k)) == vs);
	}
	CHECK_FALSE(base_set(VariantId::P7, 13, 3).has_value());
	CHECK(base_set_filename(base_sets().front()) == "S8_4_2.scheme");
}
