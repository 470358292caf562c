#pragma once

// The acceptance suite: one pass/fail result per criterion, shared by the
// CLI `verify` command and the acceptance test binary.

#include <map>
#include <set>
#include <string>
#include <vector>

namespace pconf {

struct CriterionResult {
    int id;
    std::string module;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
    double budgetSeconds;
};

struct VerifyOptions {
    // Criterion ids ("7") or module names ("fredholm"); empty runs everything.
    std::set<std::string> only;
    // Overrides of the entries of default_tolerances(); the key "all" replaces
    // every absolute/relative tolerance (rates and time budgets are untouched).
    std::map<std::string, double> tolerances;
};

std::map<std::string, double> default_tolerances();

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt = {});

// "PASS [ 7] fredholm  ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace pconf
