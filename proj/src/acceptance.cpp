#include "coinweigh/acceptance.hpp"

#include <chrono>
#include <sstream>

#include "coinweigh/adaptive.hpp"
#include "coinweigh/appendix.hpp"
#include "coinweigh/bounds.hpp"
#include "coinweigh/constructors.hpp"
#include "coinweigh/scheme_io.hpp"
#include "coinweigh/verifier.hpp"

#ifndef COINWEIGH_DATA_DIR
#define COINWEIGH_DATA_DIR "data"
#endif

namespace coinweigh {

std::filesystem::path default_data_dir()
{
	return COINWEIGH_DATA_DIR;
}

std::string format_result(const CriterionResult& r)
{
	std::ostringstream out;
	out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title;
	if (!r.detail.empty())
	{
		out << " -- " << r.detail;
	}
	return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
	return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s)
{
	std::ostringstream out;
	out.precision(2);
	out << std::fixed << s << "s";
	return out.str();
}

// Coins then the genuine vector, e.g. "ll ln lr nl nr rl rn + rr".
std::string one_line(const Scheme& s)
{
	std::string out;
	for (const auto& v : s.coins())
	{
		out += (out.empty() ? "" : " ") + format_lnr(v);
	}
	if (s.genuine())
	{
		out += " + " + format_lnr(*s.genuine());
	}
	return out;
}

CriterionResult full_grid(int max_k)
{
	const auto start = Clock::now();
	int schemes = 0;
	std::uint64_t configurations = 0;
	std::vector<std::string> failures;
	for (auto v : all_variants())
	{
		for (int k = 2; k <= max_k; ++k)
		{
			const auto b = static_cast<int>(bound(v, k));
			for (int n = 1; n <= b; ++n)
			{
				if (is_solvable(v, n, k) != Solvability::nonadaptive)
				{
					continue;
				}
				try
				{
					const auto report = verify_exhaustive(construct(v, n, k));
					++schemes;
					configurations += report.configurations_checked;
					if (!report.passed)
					{
						failures.push_back(to_string(v) + "(" + std::to_string(n) + "," + std::to_string(k) + ")");
					}
				}
				catch (const std::exception& e)
				{
					failures.push_back(to_string(v) + "(" + std::to_string(n) + "," + std::to_string(k) + "): " + e.what());
				}
			}
		}
	}
	const double elapsed = seconds_since(start);
	std::ostringstream detail;
	detail << schemes << " schemes, " << configurations << " configurations, " << failures.size() << " failures, "
	       << fmt_seconds(elapsed) << " (limit 60s)";
	if (!failures.empty())
	{
		detail << "; first: " << failures.front();
	}
	return {1, "construction soundness over P1-P12, k=2.." + std::to_string(max_k),
	        failures.empty() && elapsed < 60.0, detail.str()};
}

CriterionResult boundary_constructive(int max_k)
{
	std::vector<std::string> failures;
	for (auto v : all_variants())
	{
		for (int k = 2; k <= max_k; ++k)
		{
			const auto b = static_cast<int>(bound(v, k));
			const std::string tag = to_string(v) + " k=" + std::to_string(k);
			try
			{
				if (!verify_exhaustive(construct(v, b, k)).passed)
				{
					failures.push_back(tag + " at B fails verification");
				}
			}
			catch (const std::exception& e)
			{
				failures.push_back(tag + " at B: " + e.what());
			}
			if (is_solvable(v, b + 1, k) != Solvability::unsolvable)
			{
				failures.push_back(tag + " at B+1 not reported unsolvable");
			}
		}
	}
	return {2, "boundary tightness (constructive): B_i(k) builds, B_i(k)+1 unsolvable", failures.empty(),
	        failures.empty() ? std::to_string(12 * (max_k - 1)) + " boundaries" : failures.front()};
}

CriterionResult boundary_oracle()
{
	const auto start = Clock::now();
	std::vector<std::string> failures;
	std::vector<std::string> skipped;
	for (int k = 2; k <= 3; ++k)
	{
		for (auto v : all_variants())
		{
			const auto b = static_cast<int>(bound(v, k));
			const auto at = adaptive_feasible(v, b, k);
			const auto above = adaptive_feasible(v, b + 1, k);
			const std::string tag = to_string(v) + " k=" + std::to_string(k);
			const bool required = k == 2 || (v >= VariantId::P5 && v <= VariantId::P8);
			if (at.verdict == Feasibility::budget_exceeded || above.verdict == Feasibility::budget_exceeded)
			{
				(required ? failures : skipped).push_back(tag + " budget exceeded");
				continue;
			}
			if (at.verdict != Feasibility::feasible)
			{
				failures.push_back(tag + " infeasible at B=" + std::to_string(b));
			}
			if (above.verdict != Feasibility::infeasible)
			{
				failures.push_back(tag + " feasible at B+1=" + std::to_string(b + 1));
			}
		}
	}
	const double elapsed = seconds_since(start);
	std::ostringstream detail;
	detail << "k=2 and k=3 for all 12 variants, " << failures.size() << " failures, " << skipped.size()
	       << " over budget, " << fmt_seconds(elapsed) << " (limit 600s)";
	if (!failures.empty())
	{
		detail << "; first: " << failures.front();
	}
	return {3, "boundary tightness (game-tree oracle)", failures.empty() && elapsed < 600.0, detail.str()};
}

CriterionResult nonexistence()
{
	std::vector<std::string> failures;
	auto expect = [&](bool ok, const std::string& what) {
		if (!ok)
		{
			failures.push_back(what);
		}
	};
	expect(search_nonadaptive(VariantId::P4, 7, 2).status == SearchStatus::none, "P4(7,2) has a scheme");
	const auto p3 = search_nonadaptive(VariantId::P3, 7, 2);
	expect(p3.status == SearchStatus::none,
	       "P3(7,2) has a scheme: " + (p3.scheme ? one_line(*p3.scheme) : std::string()));
	expect(search_nonadaptive(VariantId::P7, 11, 3).status == SearchStatus::none,
	       "P7(11,3) has a scheme under the construction conditions");
	expect(search_nonadaptive(VariantId::P7, 11, 3, ConditionSet{}.with(Condition::all_ones_free)).status ==
	           SearchStatus::found,
	       "P7(11,3) has no scheme with all_ones_free waived");
	expect(complement_argument_check(2), "complement argument fails at k=2");
	expect(complement_argument_check(3), "complement argument fails at k=3");

	std::string detail = failures.empty() ? "6 exact checks" : failures.front();
	for (std::size_t i = 1; i < failures.size(); ++i)
	{
		detail += "; " + failures[i];
	}
	return {4, "non-existence reproductions", failures.empty(), detail};
}

CriterionResult appendix_fidelity(const std::filesystem::path& data_dir)
{
	std::vector<std::string> failures;
	for (const auto& b : base_sets())
	{
		const auto name = base_set_filename(b);
		try
		{
			const auto golden = read_scheme_file(data_dir / "appendix" / name);
			auto conditions = required_conditions(b.variant, ConditionRole::construction);
			const bool waived = b.variant == VariantId::P7 && b.n == 11 && b.k == 3;
			if (waived)
			{
				conditions.all_ones_free = false;
			}
			if (!check_conditions(golden, conditions).passed)
			{
				failures.push_back(name + " fails its conditions");
			}
			const auto built = b.variant == VariantId::P8 ? construct_p8(b.n, b.k) : construct_p7(b.n, b.k);
			if (built != golden.coins())
			{
				failures.push_back(name + " differs from the constructor output");
			}
		}
		catch (const std::exception& e)
		{
			failures.push_back(name + ": " + e.what());
		}
	}
	return {5, "appendix base sets (golden files) satisfy their conditions and match the constructors",
	        failures.empty(),
	        failures.empty() ? std::to_string(base_sets().size()) + " base sets" : failures.front()};
}

CriterionResult adaptive_totality()
{
	std::vector<std::string> parts;
	bool ok = true;
	for (auto [n, k] : {std::pair{7, 2}, std::pair{25, 3}, std::pair{79, 4}})
	{
		const auto report = verify_exhaustive(build_adaptive_p4(VariantId::P4, n, k));
		const bool good = report.passed && report.configurations_checked == static_cast<std::uint64_t>(2 * n + 1);
		ok = ok && good;
		parts.push_back("(" + std::to_string(n) + "," + std::to_string(k) + "): " +
		                std::to_string(report.configurations_checked) + (good ? " ok" : " FAILED"));
	}
	std::string detail;
	for (const auto& p : parts)
	{
		detail += (detail.empty() ? "" : ", ") + p;
	}
	return {6, "adaptive P4 trees answer every configuration", ok, detail};
}

CriterionResult multi_extra()
{
	const int n = static_cast<int>(bound(VariantId::P6, 2)) + 1;
	const auto r = adaptive_feasible(VariantId::P6, n, 2, 3);
	return {7, "P6 bound holds with three extra genuine coins", r.verdict == Feasibility::infeasible,
	        "P6 n=" + std::to_string(n) + " k=2 extras=3: " + to_string(r.verdict)};
}

CriterionResult extension_repair(int max_k)
{
	std::vector<std::string> failures;
	const auto p8 = required_conditions(VariantId::P8, ConditionRole::construction);
	const int top = std::max(max_k, 4);
	for (int k = 4; k <= top; ++k)
	{
		const auto tag = "k=" + std::to_string(k) + ": ";
		const auto block = concatenation_block(k);

		auto literal = block;
		const auto lit = literal_extension_vectors(k);
		literal.insert(literal.end(), lit.begin(), lit.end());
		const auto balance = check_conditions(Scheme(VariantId::P8, k, literal), ConditionSet{}.with(Condition::balanced));
		std::vector<int> expected_residual(static_cast<std::size_t>(k), 0);
		expected_residual[static_cast<std::size_t>(k - 2)] = -1;
		expected_residual[static_cast<std::size_t>(k - 1)] = 1;
		if (balance.passed || balance.condition_failures.front().residual != expected_residual)
		{
			failures.push_back(tag + "literal extension not caught by the balance check");
		}
		// The block alone already pairs 0^{k-2}w with 0^{k-2}(-w).
		const auto opposite = check_conditions(Scheme(VariantId::P8, k, block), ConditionSet{}.with(Condition::opposite_free));
		if (opposite.condition_failures.size() != 4)
		{
			failures.push_back(tag + "expected four opposite pairs in the concatenation block");
		}

		const auto built = construct_p8(static_cast<int>(bound(VariantId::P8, k)), k);
		const auto ext = extension_vectors(k);
		if (!std::equal(ext.rbegin(), ext.rend(), built.rbegin()) || !check_conditions(Scheme(VariantId::P8, k, built), p8).passed)
		{
			failures.push_back(tag + "repaired set fails");
		}
	}
	return {8, "extension vectors: literal set unbalanced, repaired set passes", failures.empty(),
	        failures.empty() ? "k=4.." + std::to_string(top) : failures.front()};
}

CriterionResult small_n_ledger()
{
	std::vector<std::string> failures;
	int checks = 0;
	for (auto v : {VariantId::P4, VariantId::P5, VariantId::P6, VariantId::P7, VariantId::P8})
	{
		for (int n : {1, 2})
		{
			for (int k = 0; k <= 3; ++k)
			{
				const bool claimed = is_solvable(v, n, k) != Solvability::unsolvable;
				const auto oracle = adaptive_feasible(v, n, k);
				++checks;
				if ((oracle.verdict == Feasibility::feasible) != claimed ||
				    oracle.verdict == Feasibility::budget_exceeded)
				{
					failures.push_back(to_string(v) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
				}
			}
		}
	}
	return {9, "small-n cases agree with the game-tree oracle", failures.empty(),
	        failures.empty() ? std::to_string(checks) + " (variant, n, k) checks" : failures.front()};
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options)
{
	const auto data_dir = options.data_dir.empty() ? default_data_dir() : options.data_dir;
	std::vector<std::function<CriterionResult()>> criteria{
	    [&] { return full_grid(options.max_k); },
	    [&] { return boundary_constructive(options.max_k); },
	    [] { return boundary_oracle(); },
	    [] { return nonexistence(); },
	    [&] { return appendix_fidelity(data_dir); },
	    [] { return adaptive_totality(); },
	    [] { return multi_extra(); },
	    [&] { return extension_repair(options.max_k); },
	    [] { return small_n_ledger(); },
	};
	std::vector<CriterionResult> results;
	for (const auto& run : criteria)
	{
		CriterionResult r;
		try
		{
			r = run();
		}
		catch (const std::exception& e)
		{
			r = {static_cast<int>(results.size()) + 1, "criterion aborted", false, e.what()};
		}
		if (options.on_result)
		{
			options.on_result(r);
		}
		results.push_back(std::move(r));
	}
	return results;
}

} // namespace coinweigh
