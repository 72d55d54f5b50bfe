#include <iostream>

#include "toeplab_cli/acceptance.hpp"

int main() {
    const auto results = toeplab::cli::run_acceptance(
        [](const toeplab::cli::CriterionResult& r) { std::cout << toeplab::cli::format_line(r) << std::endl; });
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << (results.size() - failed) << "/" << results.size() << " acceptance criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
