#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corefactor {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Self-contained cross-validation suites (implementation vs the naive
// oracles), runnable from the CLI without a test framework. Suites:
// "small-oracles", "thresholds", "all".
std::vector<VerifyCheck> run_verify_suite(const std::string& suite);

}  // namespace corefactor
