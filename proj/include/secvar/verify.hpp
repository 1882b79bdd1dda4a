#pragma once

#include <vector>

#include "secvar/config.hpp"
#include "secvar/report.hpp"
#include "secvar/varieties.hpp"

namespace secvar {

// Fixtures for the built-in verification suite: the Veronese surface, a
// generic projection of the cubic Veronese surface into P^5, the three
// quartic scroll types and the cone over the quartic rational curve.
// The projection matrix is drawn deterministically from cfg.seed.
std::vector<Variety> verification_fixtures(const ComputeCfg& cfg);

struct SuiteResult {
    std::vector<SuiteLine> lines;
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

// Expected-versus-actual dimension facts for the surfaces in P^5 whose
// family of lines inside 3-secant planes is degenerate, plus a full
// implication sweep over every fixture. The fixture overload exists so
// tests can perturb a fixture and watch a line fail.
SuiteResult run_verification_suite(const ComputeCfg& cfg);
SuiteResult run_verification_suite(const ComputeCfg& cfg, const std::vector<Variety>& fixtures);

} // namespace secvar
