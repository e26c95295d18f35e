#pragma once

#include "webcat/homspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace webcat {

struct RelationInstance {
    std::string name;
    std::string params;
    std::string suite;
    enum class Mode { Equal, MatrixEqual, Equivariance } mode = Mode::Equal;
    Morphism lhs, rhs;  // rhs unused for Equivariance
};

struct CheckResult {
    bool ok = true;
    std::string message;
};

/// Instantiates one suite over all admissible parameters within the bounds.
/// Suites: glweb, pweb, pwebm, oriented, brauer, functorial.
std::vector<RelationInstance> generate_suite(const std::string& suite, int label_bound,
                                             int rung_bound);

const std::vector<std::string>& suite_names();

/// Evaluates both sides exactly at V_n and compares.
CheckResult check_instance(const RelationInstance& inst, int n);

/// Faithful n when affordable, else 3.
int default_instance_n(const RelationInstance& inst);

struct SuiteReport {
    long passed = 0;
    std::vector<std::string> failures;  // "name params: message"
};

/// Runs the instances concurrently; the report is merged in instance order.
SuiteReport run_suite(const std::vector<RelationInstance>& instances,
                      std::optional<int> n_override, unsigned threads = 0);

}  // namespace webcat
