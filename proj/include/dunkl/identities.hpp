#pragma once

#include <string>
#include <vector>

#include "dunkl/bases.hpp"
#include "dunkl/operator_expr.hpp"

namespace dunkl {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample, constant ratios, skip notes
};

// Suite names accepted by run_suite and the CLI: osp12, laplace-symmetries,
// dirac-symmetries, kelvin, projections, bases, section5-constants, all.
std::vector<std::string> suite_names();

std::vector<CheckResult> run_suite(const Setup& s, const std::string& suite, int max_degree);

}  // namespace dunkl
