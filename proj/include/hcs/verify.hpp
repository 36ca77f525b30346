#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hcs {

struct SuiteResult {
    std::string name;
    int total = 0;
    int passed = 0;
    std::vector<std::string> failures;  // first few failing check labels
    bool ok() const { return total == passed; }
};

std::vector<std::string> suite_names();

// Runs one of: formulations, oracle, sandwich, sparsifier, split-weak,
// split-strong, expansion. Unknown names throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, uint64_t seed = 0);

}  // namespace hcs
