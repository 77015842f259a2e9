#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run
{
	int code;
	std::string out;
	std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "")
{
	std::istringstream in(input);
	std::ostringstream out;
	std::ostringstream err;
	const int code = coinweigh::cli::run(args, in, out, err);
	return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
	const auto dir = std::filesystem::temp_directory_path() / "coinweigh_cli_test";
	std::filesystem::create_directories(dir);
	return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
	std::ifstream f(p, std::ios::binary);
	return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

const std::string golden_dir = std::string(COINWEIGH_DATA_DIR) + "/appendix/";

} // namespace

TEST_CASE("bounds")
{
	const auto all = run({"bounds", "--k", "3"});
	CHECK(all.code == 0);
	CHECK(all.out.find("P1: 27\n") != std::string::npos);
	CHECK(all.out.find("P7: 12\n") != std::string::npos);
	CHECK(all.out.find("P6: 14\n") != std::string::npos);
	CHECK(run({"bounds", "--k", "0", "--variant", "P2"}).out == "P2: 1\n");
	CHECK(run({"bounds", "--k", "4", "--variant", "P8"}).out == "P8: 40\n");
	CHECK(run({"bounds", "--k", "4", "--variant", "P0"}).code == 2);
	CHECK(run({"bounds"}).code == 2);
	CHECK(run({}).code == 2);
}

TEST_CASE("build")
{
	const auto p8 = run({"build", "--variant", "P8", "--n", "13", "--k", "3"});
	CHECK(p8.code == 0);
	CHECK(p8.out == slurp(golden_dir + "S8_13_3.scheme"));
	CHECK(p8.err.find("PASS") != std::string::npos);

	const auto over = run({"build", "--variant", "P5", "--n", "14", "--k", "3"});
	CHECK(over.code == 1);
	CHECK(over.err.find("14 > 13") != std::string::npos);

	const auto tree = run({"build", "--variant", "P4", "--n", "7", "--k", "2"});
	CHECK(tree.code == 0);
	CHECK(tree.out.rfind("tree variant=P4 n=7 k=2", 0) == 0);
	CHECK(tree.err.find("adaptive_only") != std::string::npos);

	CHECK(run({"build", "--variant", "P7", "--n", "2", "--k", "3"}).code == 1);
	CHECK(run({"build", "--variant", "P7", "--n", "x", "--k", "3"}).code == 2);
}

TEST_CASE("build then verify round trip")
{
	for (const auto& [v, n, k] : {std::tuple{"P1", "27", "3"}, {"P3", "25", "3"}, {"P6", "41", "4"}, {"P11", "38", "4"},
	                              {"P10", "40", "4"}, {"P8", "121", "5"}})
	{
		const auto path = scratch(std::string(v) + ".scheme").string();
		const auto built = run({"build", "--variant", v, "--n", n, "--k", k, "--out", path});
		CHECK(built.code == 0);
		CHECK(built.out.find("PASS") != std::string::npos);
		const auto checked = run({"verify", path});
		CHECK(checked.code == 0);
		CHECK(checked.out.rfind("PASS", 0) == 0);
	}
}

TEST_CASE("verify")
{
	CHECK(run({"verify", golden_dir + "S8_4_2.scheme"}).code == 0);

	const auto bad = scratch("bad.scheme");
	std::ofstream(bad) << "variant=P8 n=2 k=2 genuine=none\nnl\nnq\n";
	const auto parsed = run({"verify", bad.string()});
	CHECK(parsed.code == 2);
	CHECK(parsed.err.find("line 3") != std::string::npos);

	const auto wrong = scratch("wrong.scheme");
	std::ofstream(wrong) << "variant=P7 n=2 k=1 genuine=none\nl\nr\n";
	const auto failed = run({"verify", wrong.string()});
	CHECK(failed.code == 1);
	CHECK(failed.out.rfind("FAIL", 0) == 0);

	CHECK(run({"verify", scratch("missing.scheme").string()}).code != 0);
}

TEST_CASE("search")
{
	const auto none = run({"search", "--variant", "P4", "--n", "7", "--k", "2"});
	CHECK(none.code == 1);
	CHECK(none.out.find("none exists") != std::string::npos);

	CHECK(run({"search", "--variant", "P7", "--n", "11", "--k", "3"}).code == 1);
	const auto waived = run({"search", "--variant", "P7", "--n", "11", "--k", "3", "--waive", "all_ones_free"});
	CHECK(waived.code == 0);
	CHECK(waived.out.find("variant=P7 n=11 k=3") != std::string::npos);

	CHECK(run({"search", "--variant", "P7", "--n", "12", "--k", "3", "--budget", "2"}).code == 2);
	CHECK(run({"search", "--variant", "P7", "--n", "12", "--k", "3", "--waive", "nonsense"}).code == 2);
}

TEST_CASE("feasible")
{
	const auto no = run({"feasible", "--variant", "P8", "--n", "5", "--k", "2"});
	CHECK(no.code == 1);
	CHECK(no.out.find("infeasible") != std::string::npos);
	CHECK(run({"feasible", "--variant", "P8", "--n", "4", "--k", "2"}).code == 0);
	CHECK(run({"feasible", "--variant", "P6", "--n", "6", "--k", "2", "--extras", "3"}).code == 1);
	CHECK(run({"feasible", "--variant", "P7", "--n", "39", "--k", "4", "--budget", "1"}).code == 2);
	CHECK(run({"feasible", "--variant", "P8", "--n", "4", "--k", "2", "--extras", "1"}).code == 2);
}

TEST_CASE("interact")
{
	const auto found = run({"interact", "--variant", "P4", "--n", "7", "--k", "2"}, "b\nl\n");
	CHECK(found.code == 0);
	CHECK(found.out.find("Answer: coin 7 is counterfeit and heavier") != std::string::npos);

	const auto lighter = run({"interact", "--variant", "P4", "--n", "7", "--k", "2", "--known", "lighter"}, "b\nr\n");
	CHECK(lighter.out.find("Answer: coin 7 is counterfeit and lighter") != std::string::npos);

	const auto none = run({"interact", "--variant", "P4", "--n", "7", "--k", "2"}, "b\nb\n");
	CHECK(none.code == 0);
	CHECK(none.out.find("no counterfeit coin") != std::string::npos);

	const auto retry = run({"interact", "--variant", "P4", "--n", "7", "--k", "2"}, "x\n\nb\n  b \n");
	CHECK(retry.code == 0);
	CHECK(retry.out.find("please enter one of l, b, r") != std::string::npos);
	CHECK(retry.out.find("Trial 3") == std::string::npos);
	CHECK(retry.out.find("no counterfeit coin") != std::string::npos);

	const auto clash = run({"interact", "--variant", "P4", "--n", "7", "--k", "2"}, "b\nr\n");
	CHECK(clash.code == 1);
	CHECK(clash.err.find("trial 2") != std::string::npos);

	const auto short_input = run({"interact", "--variant", "P4", "--n", "7", "--k", "2"}, "b\n");
	CHECK(short_input.code == 2);

	const auto twelve = run({"interact", "--variant", "P7", "--n", "12", "--k", "3"}, "l\nr\nb\n");
	CHECK(twelve.code == 0);
	CHECK(twelve.out.find("Answer: coin") != std::string::npos);
}

TEST_CASE("selftest")
{
	const auto r = run({"selftest", "--max-k", "3"});
	CHECK(r.out.find("[PASS] 1.") != std::string::npos);
	CHECK(r.out.find("[PASS] 5.") != std::string::npos);
	CHECK(r.out.find(" 9. ") != std::string::npos);
}
