#pragma once

// Self-contained verification checks for the library's documented
// guarantees.  Each check has a stable numeric id; suites bundle related
// ids for the command line.

#include <string>
#include <vector>

namespace markovgeo {

struct CheckResult {
    int id;
    std::string name;
    bool passed;
    double millis;
    std::string detail;   // first failure, empty when passed
};

inline constexpr int criterion_count = 10;

CheckResult run_criterion(int id);   // invalid_argument on unknown id
std::vector<CheckResult> run_criteria(const std::vector<int>& ids);

// "all", "tables", "flips", "hurwitz", "equivariance", "crossing",
// "geodesics", "uniqueness", "definite"
std::vector<int> suite_ids(const std::string& name);   // invalid_argument
std::vector<std::string> suite_names();

} // namespace markovgeo
