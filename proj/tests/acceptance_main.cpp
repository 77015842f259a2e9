// One line per acceptance criterion; the exit status is nonzero if any fails.

#include <algorithm>
#include <iostream>

#include "coinweigh/acceptance.hpp"

int main()
{
	coinweigh::AcceptanceOptions options;
	options.on_result = [](const coinweigh::CriterionResult& r) {
		std::cout << coinweigh::format_result(r) << std::endl;
	};
	const auto results = coinweigh::run_acceptance(options);
	const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
	std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
	return failed == 0 ? 0 : 1;
}
