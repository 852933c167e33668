#pragma once

#include "hopfhc/config.hpp"
#include "hopfhc/homology.hpp"

#include <memory>
#include <string>

namespace hopfhc {

struct RunResult {
    int exit_code = 0;        // 0 = all fatal checks pass, 1 = failure, 2 = config error
    std::string report_json;  // full report document
};

/// Execute a parsed configuration and render the JSON report.
/// theory = check       : the full identity ledger up to max_degree;
/// theory = hochschild  : build CM and report Hochschild ranks;
/// theory = cyclic      : build CM and report cyclic ranks (cyclic bicomplex);
/// theory = uq_vanishing: the U_q(sl2) vanishing certificates.
RunResult run(const RunConfig& cfg);

/// Identity suite behind `theory = check`, reusable from tests.
IdentityLedger run_check_suite(std::shared_ptr<const HopfPreset> B,
                               std::shared_ptr<const CoefficientModule> Y, int max_degree);

std::shared_ptr<const HopfPreset> make_algebra(const RunConfig& cfg);
std::shared_ptr<const CoefficientModule> make_coefficients(
    const RunConfig& cfg, std::shared_ptr<const HopfPreset> B);

} // namespace hopfhc
