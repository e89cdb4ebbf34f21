#pragma once

#include <string>
#include <vector>

#include "varmech/core.hpp"
#include "varmech/integrate.hpp"

namespace varmech {

struct VerificationCheck {
    std::string name;
    double value = 0.0;      ///< measured drift or residual
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_pass = true;
};

/// Integrates one half-plane state and audits every invariant the library
/// knows on the same run: relative drift of E and p, the translation-family
/// and one trigonometric-field nonlocal constant, the specialised vertical
/// form, and the worst u'' = 2 E u residual. Drift checks use drift_tol,
/// the residual check uses residual_tol.
VerificationReport verify_geodesic_run(const State& s0, const IntegrationConfig& cfg,
                                       double drift_tol = 1e-5,
                                       double residual_tol = 1e-3);

}  // namespace varmech
