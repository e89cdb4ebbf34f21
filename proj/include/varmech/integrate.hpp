#pragma once

#include <span>

#include "varmech/core.hpp"
#include "varmech/lagrangian.hpp"

namespace varmech {

/// Fixed-step run description. (t1 - t0) / h must round to an integer step
/// count N >= 2; the grid is then t0, t0 + h, ..., t0 + N h.
struct IntegrationConfig {
    double h = 1e-3;
    double t1 = 5.0;
    /// Singularity guard: accepted states must keep an axis-aligned box of
    /// this radius inside the domain (probed at the 2n face centres), so
    /// runs abort a little before touching the boundary itself.
    double min_q_margin = 1e-9;
};

/// Classical fourth-order Runge-Kutta on (q, v)' = (v, acceleration).
/// Every stage configuration is checked against the domain predicate and the
/// margin guard above; a violation raises SingularityError with the step time,
/// a NaN/Inf raises NumericError.
Trajectory integrate_el(const LagrangianSystem& sys, const State& s0,
                        const IntegrationConfig& cfg);

/// Running integral over a uniform grid: result[k] approximates the integral
/// of the sampled function from the grid start through sample k, result[0]
/// == 0. Cumulative Simpson at even indices with single-panel trapezoid
/// fill-in at odd ones (plain cumulative trapezoid below 5 samples), so the
/// error is O(h^2) pointwise and O(h^4) at even indices. The weights are
/// fixed per grid length, which keeps the map linear in the samples.
std::vector<double> cumulative_integral(std::span<const double> values, double h);

}  // namespace varmech
