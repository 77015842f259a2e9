// End-to-end checks of the constructions, bounds and oracles; shared by the
// acceptance test binary and `coinweigh selftest`.

#ifndef COINWEIGH_ACCEPTANCE_HPP
#define COINWEIGH_ACCEPTANCE_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace coinweigh {

struct CriterionResult
{
	int id;
	std::string title;
	bool passed;
	std::string detail;
};

struct AcceptanceOptions
{
	int max_k = 6;                         // upper end of the constructive grid
	std::filesystem::path data_dir;        // holds appendix/*.scheme
	std::function<void(const CriterionResult&)> on_result; // called as each criterion finishes
};

std::filesystem::path default_data_dir();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

std::string format_result(const CriterionResult& r);

} // namespace coinweigh

#endif
