#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coinweigh/acceptance.hpp"
#include "coinweigh/adaptive.hpp"
#include "coinweigh/bounds.hpp"
#include "coinweigh/constructors.hpp"
#include "coinweigh/scheme_io.hpp"
#include "coinweigh/verifier.hpp"

namespace coinweigh::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

std::string instance(VariantId v, int n, int k)
{
	return to_string(v) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

std::string describe(const Answer& a)
{
	switch (a.sign)
	{
	case Sign::none: return "no counterfeit coin";
	case Sign::unknown: return "coin " + std::to_string(a.culprit) + " is counterfeit (heavier or lighter, not determined)";
	default: return "coin " + std::to_string(a.culprit) + " is counterfeit and " + to_string(a.sign);
	}
}

std::string pan_text(const std::vector<int>& ids, int n)
{
	std::string out;
	for (int id : ids)
	{
		out += (out.empty() ? "" : " ") + (id == n + 1 ? std::string("genuine") : std::to_string(id));
	}
	return out.empty() ? "-" : out;
}

int cmd_bounds(int k, const std::string& variant, std::ostream& out)
{
	const auto variants = variant.empty() ? all_variants() : std::vector<VariantId>{parse_variant(variant)};
	for (auto v : variants)
	{
		out << to_string(v) << ": " << bound(v, k) << '\n';
	}
	return exit_ok;
}

int cmd_build(VariantId v, int n, int k, const std::string& path, std::ostream& out, std::ostream& err)
{
	const auto status = is_solvable(v, n, k);
	if (status == Solvability::unsolvable)
	{
		const auto b = bound(v, k);
		err << instance(v, n, k) << " is unsolvable: ";
		if (n > b)
		{
			err << n << " > " << b << " = B_" << to_string(v) << "(" << k << ")\n";
		}
		else
		{
			err << "too few coins for equal-pan weighings to separate the candidates\n";
		}
		return exit_fail;
	}

	std::string text;
	VerificationReport report;
	if (status == Solvability::adaptive_only)
	{
		const auto tree = build_adaptive_p4(v, n, k);
		text = format_tree(tree);
		report = verify_exhaustive(tree);
	}
	else
	{
		const auto scheme = construct(v, n, k);
		text = format_scheme(scheme);
		report = verify_exhaustive(scheme);
	}

	std::ostream& verdict = path.empty() ? err : out;
	if (path.empty())
	{
		out << text;
	}
	else
	{
		std::ofstream file(path, std::ios::binary);
		if (!file)
		{
			err << "cannot write " << path << '\n';
			return exit_usage;
		}
		file << text;
	}
	verdict << instance(v, n, k) << ": " << to_string(status) << '\n' << format_report(report);
	return report.passed ? exit_ok : exit_fail;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err)
{
	Scheme scheme = [&] {
		try
		{
			return read_scheme_file(path);
		}
		catch (const ParseError& e)
		{
			err << path << ": " << e.what() << '\n';
			throw;
		}
	}();
	const auto report = verify_exhaustive(scheme);
	out << format_report(report);
	return report.passed ? exit_ok : exit_fail;
}

int cmd_search(VariantId v, int n, int k, const std::string& waive_list, std::uint64_t budget, std::ostream& out)
{
	ConditionSet waive;
	std::stringstream names(waive_list);
	for (std::string name; std::getline(names, name, ',');)
	{
		if (!name.empty())
		{
			waive = waive.with(parse_condition(name));
		}
	}
	const auto conditions = required_conditions(v, ConditionRole::construction).without(waive);
	const auto result = search_nonadaptive(v, n, k, waive, budget);
	switch (result.status)
	{
	case SearchStatus::found:
		out << "found (" << result.nodes << " nodes) under " << to_string(conditions) << '\n'
		    << format_scheme(*result.scheme);
		return exit_ok;
	case SearchStatus::none:
		out << "none exists for " << instance(v, n, k) << " under " << to_string(conditions) << " (" << result.nodes
		    << " nodes)\n";
		return exit_fail;
	case SearchStatus::budget_exceeded:
		out << "budget of " << budget << " nodes exceeded\n";
		return exit_usage;
	}
	return exit_usage;
}

int cmd_feasible(VariantId v, int n, int k, std::optional<int> extras, std::uint64_t budget, std::ostream& out)
{
	const auto result = adaptive_feasible(v, n, k, extras, budget);
	out << instance(v, n, k);
	if (extras)
	{
		out << " extras=" << *extras;
	}
	out << ": " << to_string(result.verdict) << " (" << result.states << " states)\n";
	switch (result.verdict)
	{
	case Feasibility::feasible: return exit_ok;
	case Feasibility::infeasible: return exit_fail;
	case Feasibility::budget_exceeded: return exit_usage;
	}
	return exit_usage;
}

int cmd_interact(VariantId v, int n, int k, Sign known, std::istream& in, std::ostream& out, std::ostream& err)
{
	const auto status = is_solvable(v, n, k);
	if (status == Solvability::unsolvable)
	{
		err << instance(v, n, k) << " is unsolvable\n";
		return exit_fail;
	}
	const auto tree = status == Solvability::adaptive_only ? build_adaptive_p4(v, n, k) : tree_from_scheme(construct(v, n, k));
	const bool comparison_known = variant_info(v).weight_known;

	out << instance(v, n, k) << " (" << to_string(status) << ")";
	if (comparison_known)
	{
		out << ", counterfeit known to be " << to_string(known) << " if present";
	}
	out << "\nEnter l if the left pan sinks, r if the right pan sinks, b if balanced.\n";

	AdaptiveSession session(tree, known);
	while (!session.finished())
	{
		const auto& pans = session.current_weighing();
		out << "Trial " << session.round() + 1 << ": left {" << pan_text(pans.left, n) << "} vs right {"
		    << pan_text(pans.right, n) << "}\n";
		for (;;)
		{
			out << "reading> " << std::flush;
			std::string line;
			if (!std::getline(in, line))
			{
				err << "input ended before the session finished\n";
				return exit_usage;
			}
			const auto first = line.find_first_not_of(" \t\r");
			const auto last = line.find_last_not_of(" \t\r");
			const auto word = first == std::string::npos ? std::string() : line.substr(first, last - first + 1);
			const auto reading = word.size() == 1 ? parse_tilt(word[0]) : std::nullopt;
			if (!reading)
			{
				out << "please enter one of l, b, r\n";
				continue;
			}
			try
			{
				session.feed(*reading);
			}
			catch (const std::runtime_error& e)
			{
				err << "contradiction: " << e.what() << '\n';
				return exit_fail;
			}
			break;
		}
	}
	out << "Answer: " << describe(session.answer()) << '\n';
	return exit_ok;
}

int cmd_selftest(int max_k, const std::string& data_dir, std::ostream& out)
{
	AcceptanceOptions options;
	options.max_k = max_k;
	if (!data_dir.empty())
	{
		options.data_dir = data_dir;
	}
	options.on_result = [&](const CriterionResult& r) { out << format_result(r) << std::endl; };
	const auto results = run_acceptance(options);
	const bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
	out << (all ? "all criteria passed" : "some criteria failed") << '\n';
	return all ? exit_ok : exit_fail;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Counterfeit-coin weighing schemes: construct, verify, search and play"};
	app.require_subcommand(1, 1);

	std::string variant_name;
	std::string path;
	std::string waive;
	std::string known_name = "heavier";
	std::string data_dir;
	int n = 0;
	int k = 0;
	int max_k = 5;
	std::optional<int> extras;
	std::uint64_t budget = 0;

	auto* bounds = app.add_subcommand("bounds", "Print B_i(k) per variant");
	bounds->add_option("--k", k, "Trial count")->required()->check(CLI::Range(0, 39));
	bounds->add_option("--variant", variant_name, "Single variant (P1..P12)");

	auto add_instance = [&](CLI::App* cmd) {
		cmd->add_option("--variant", variant_name, "Variant P1..P12")->required();
		cmd->add_option("--n", n, "Number of coins")->required()->check(CLI::PositiveNumber);
		cmd->add_option("--k", k, "Number of trials")->required()->check(CLI::Range(0, 39));
	};

	auto* build = app.add_subcommand("build", "Construct and verify a scheme (or adaptive tree)");
	add_instance(build);
	build->add_option("--out", path, "Output file (default: standard output)");

	auto* verify = app.add_subcommand("verify", "Exhaustively verify a scheme file");
	verify->add_option("path", path, "Scheme file")->required();

	auto* search = app.add_subcommand("search", "Brute-force search for a non-adaptive scheme");
	add_instance(search);
	search->add_option("--waive", waive, "Comma-separated conditions to drop");
	search->add_option("--budget", budget, "Node limit")->default_val(default_search_budget);

	auto* feasible = app.add_subcommand("feasible", "Game-tree check for any adaptive strategy");
	add_instance(feasible);
	feasible->add_option("--extras", extras, "Number of extra genuine coins");
	feasible->add_option("--budget", budget, "State limit")->default_val(default_feasibility_budget);

	auto* interact = app.add_subcommand("interact", "Play a weighing session from the terminal");
	add_instance(interact);
	interact->add_option("--known", known_name, "Known comparison for P1-P4: heavier or lighter")
	    ->check(CLI::IsMember({"heavier", "lighter"}));

	auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
	selftest->add_option("--max-k", max_k, "Largest k for the constructive grid")->check(CLI::Range(2, 7));
	selftest->add_option("--data", data_dir, "Directory holding appendix/*.scheme");

	try
	{
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	}
	catch (const CLI::CallForHelp&)
	{
		out << app.help();
		return exit_ok;
	}
	catch (const CLI::ParseError& e)
	{
		err << e.what() << '\n';
		for (auto* sub : app.get_subcommands())
		{
			err << sub->help();
		}
		return exit_usage;
	}

	try
	{
		auto variant = [&] { return parse_variant(variant_name); };
		if (bounds->parsed())
		{
			return cmd_bounds(k, variant_name, out);
		}
		if (build->parsed())
		{
			return cmd_build(variant(), n, k, path, out, err);
		}
		if (verify->parsed())
		{
			return cmd_verify(path, out, err);
		}
		if (search->parsed())
		{
			return cmd_search(variant(), n, k, waive, budget, out);
		}
		if (feasible->parsed())
		{
			return cmd_feasible(variant(), n, k, extras, budget, out);
		}
		if (interact->parsed())
		{
			return cmd_interact(variant(), n, k, known_name == "lighter" ? Sign::lighter : Sign::heavier, in, out, err);
		}
		if (selftest->parsed())
		{
			return cmd_selftest(max_k, data_dir, out);
		}
	}
	catch (const ParseError&)
	{
		return exit_usage;
	}
	catch (const std::invalid_argument& e)
	{
		err << "error: " << e.what() << '\n';
		return exit_usage;
	}
	catch (const std::exception& e)
	{
		err << "error: " << e.what() << '\n';
		return exit_fail;
	}
	return exit_usage;
}

} // namespace coinweigh::cli
