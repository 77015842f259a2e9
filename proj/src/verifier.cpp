#include "coinweigh/verifier.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace coinweigh {

std::string to_string(Condition c)
{
	switch (c)
	{
	case Condition::balanced: return "balanced";
	case Condition::distinct: return "distinct";
	case Condition::opposite_free: return "opposite_free";
	case Condition::zero_free: return "zero_free";
	case Condition::all_ones_free: return "all_ones_free";
	}
	return "?";
}

Condition parse_condition(std::string_view name)
{
	for (auto c : {Condition::balanced, Condition::distinct, Condition::opposite_free, Condition::zero_free,
	               Condition::all_ones_free})
	{
		if (name == to_string(c))
		{
			return c;
		}
	}
	throw std::invalid_argument("unknown condition '" + std::string(name) + "'");
}

bool ConditionSet::contains(Condition c) const
{
	switch (c)
	{
	case Condition::balanced: return balanced;
	case Condition::distinct: return distinct;
	case Condition::opposite_free: return opposite_free;
	case Condition::zero_free: return zero_free;
	case Condition::all_ones_free: return all_ones_free;
	}
	return false;
}

ConditionSet ConditionSet::with(Condition c, bool on) const
{
	ConditionSet out = *this;
	switch (c)
	{
	case Condition::balanced: out.balanced = on; break;
	case Condition::distinct: out.distinct = on; break;
	case Condition::opposite_free: out.opposite_free = on; break;
	case Condition::zero_free: out.zero_free = on; break;
	case Condition::all_ones_free: out.all_ones_free = on; break;
	}
	return out;
}

ConditionSet ConditionSet::without(const ConditionSet& waived) const
{
	return {balanced && !waived.balanced, distinct && !waived.distinct, opposite_free && !waived.opposite_free,
	        zero_free && !waived.zero_free, all_ones_free && !waived.all_ones_free};
}

std::string to_string(const ConditionSet& cs)
{
	std::string out;
	for (auto c : {Condition::balanced, Condition::distinct, Condition::opposite_free, Condition::zero_free,
	               Condition::all_ones_free})
	{
		if (cs.contains(c))
		{
			out += (out.empty() ? "" : ",") + to_string(c);
		}
	}
	return "{" + out + "}";
}

namespace {

std::string join(const std::vector<int>& xs)
{
	std::string out;
	for (std::size_t i = 0; i < xs.size(); ++i)
	{
		out += (i ? "," : "") + std::to_string(xs[i]);
	}
	return out;
}

bool is_all_ones(const TernaryVector& v)
{
	// With k = 0 there is no all-ones vector distinct from 0^k.
	return v.size() > 0 && (v.is_constant(1) || v.is_constant(-1));
}

void check_balanced(const Scheme& s, VerificationReport& report)
{
	std::vector<TernaryVector> all = s.coins();
	if (s.genuine())
	{
		all.push_back(*s.genuine());
	}
	auto sum = vector_sum(all, s.k());
	if (std::any_of(sum.begin(), sum.end(), [](int x) { return x != 0; }))
	{
		report.condition_failures.push_back({Condition::balanced, {}, std::move(sum)});
	}
}

} // namespace

std::string format_report(const VerificationReport& report)
{
	std::ostringstream out;
	out << (report.passed ? "PASS" : "FAIL") << " configurations=" << report.configurations_checked
	    << " unknown_sign=" << report.unknown_sign_answers << " condition_failures=" << report.condition_failures.size()
	    << " decode_failures=" << report.decode_failures.size() << '\n';
	for (const auto& f : report.condition_failures)
	{
		out << "condition " << to_string(f.condition);
		if (!f.coins.empty())
		{
			out << " coins=" << join(f.coins);
		}
		if (!f.residual.empty())
		{
			out << " residual=(" << join(f.residual) << ")";
		}
		out << '\n';
	}
	for (const auto& f : report.decode_failures)
	{
		out << "decode config=" << to_string(f.configuration) << " expected=" << f.expected << " got=" << f.got << '\n';
	}
	return out.str();
}

VerificationReport check_conditions(const Scheme& s, const ConditionSet& cs)
{
	VerificationReport report;
	if (cs.balanced)
	{
		check_balanced(s, report);
	}
	if (cs.distinct || cs.opposite_free)
	{
		std::unordered_map<std::uint64_t, int> first_with_code;
		for (int i = 1; i <= s.n(); ++i)
		{
			const auto& v = s.coin(i);
			if (cs.distinct)
			{
				if (auto it = first_with_code.find(v.code()); it != first_with_code.end())
				{
					report.condition_failures.push_back({Condition::distinct, {it->second, i}, {}});
				}
			}
			if (cs.opposite_free && !v.is_zero())
			{
				if (auto it = first_with_code.find(negate(v).code()); it != first_with_code.end())
				{
					report.condition_failures.push_back({Condition::opposite_free, {it->second, i}, {}});
				}
			}
			first_with_code.emplace(v.code(), i);
		}
	}
	for (int i = 1; i <= s.n(); ++i)
	{
		const auto& v = s.coin(i);
		if (cs.zero_free && v.is_zero())
		{
			report.condition_failures.push_back({Condition::zero_free, {i}, {}});
		}
		if (cs.all_ones_free && is_all_ones(v))
		{
			report.condition_failures.push_back({Condition::all_ones_free, {i}, {}});
		}
	}
	report.passed = report.condition_failures.empty();
	return report;
}

VerificationReport verify_exhaustive(const Scheme& s)
{
	VerificationReport report;
	check_balanced(s, report);

	const auto info = variant_info(s.variant());
	const Decoder decoder(s);
	for (const auto& c : admissible_configurations(s.variant(), s.n()))
	{
		const Outcome o = simulate(s, c);
		const std::string expected = to_string(Answer{c.culprit, c.sign});

		// The no-counterfeit case is decoded under both comparisons when one is known.
		std::vector<std::optional<Sign>> comparisons;
		if (!info.weight_known)
		{
			comparisons.push_back(std::nullopt);
		}
		else if (c.culprit != 0)
		{
			comparisons.push_back(c.sign);
		}
		else
		{
			comparisons = {Sign::heavier, Sign::lighter};
		}

		++report.configurations_checked;
		for (const auto& known : comparisons)
		{
			std::string got;
			bool ok = false;
			try
			{
				const Answer a = decoder.decode(o, known);
				got = to_string(a);
				if (a.culprit == c.culprit)
				{
					if (a.sign == c.sign)
					{
						ok = true;
					}
					else if (a.sign == Sign::unknown && !info.sign_required)
					{
						ok = true;
						++report.unknown_sign_answers;
					}
				}
			}
			catch (const DecodeError& e)
			{
				got = std::string("error: ") + e.what();
			}
			if (!ok)
			{
				report.decode_failures.push_back({c, expected, got});
			}
		}
	}
	report.passed = report.condition_failures.empty() && report.decode_failures.empty();
	return report;
}

bool complement_argument_check(int k)
{
	const auto vectors = all_vectors(k);
	for (std::size_t a = 0; a < vectors.size(); ++a)
	{
		for (std::size_t b = a + 1; b < vectors.size(); ++b)
		{
			const bool has_zero = vectors[a].is_zero() || vectors[b].is_zero();
			const std::vector<TernaryVector> pair{vectors[a], vectors[b]};
			const auto sum = vector_sum(pair, k);
			const bool balanced = std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; });
			if (has_zero && balanced)
			{
				return false;
			}
		}
	}
	return true;
}

} // namespace coinweigh
