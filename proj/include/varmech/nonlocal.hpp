#pragma once

#include <functional>
#include <string>

#include "varmech/core.hpp"
#include "varmech/integrate.hpp"
#include "varmech/lagrangian.hpp"

namespace varmech {

// A smooth one-parameter family of curves q_lambda(t) with q_0 the actual
// motion makes
//
//   K(t) = dl_dv(t, q, v) . w(t) - integral_{t0}^{t} [ dl_dq . w + dl_dv . w' ] ds
//
// constant along solutions of the equations of motion, where w is the
// first-order variation of the family at lambda = 0. The integral term makes
// K nonlocal: it remembers the run's history. Constancy needs no symmetry of
// the Lagrangian, so any smooth field w gives a computable conservation-style
// check; how useful K is depends on the field chosen.

/// First-order variation of a trajectory family, evaluated along the actual
/// motion. `delta_q` may read the full state, so families that deform with
/// the trajectory (dilations, bends) are expressible; it must return an
/// n-vector.
struct VariationField {
    std::function<Vec(double, const State&)> delta_q;
    std::string name;
};

/// Horizontal translation family q1 -> q1 + lambda, w = (1, 0). For the
/// half-plane Lagrangian this is a symmetry, so the integrand vanishes and
/// K reduces to the momentum v1 / q2^2.
VariationField q1_translation_field();

/// Vertical translation family q2 -> q2 + lambda, w = (0, 1). Not a symmetry
/// of the half-plane: here K stays constant only through the integral term.
VariationField q2_translation_field();

/// Constancy summary for a sampled scalar invariant.
struct DriftReport {
    std::vector<double> values;  ///< the invariant at each grid sample
    double max_drift = 0.0;      ///< max |values[k] - values[0]|
    double scale = 1.0;          ///< max(1, max |values[k]|)
    double relative_drift = 0.0; ///< max_drift / scale
};

/// Builds the report fields from the sampled values.
DriftReport make_drift_report(std::vector<double> values);

/// Pointwise pieces of K along a trajectory, kept separate so tests and
/// diagnostics can look at the boundary term and the integrand on their own.
struct NonlocalTerms {
    std::vector<double> boundary;   ///< dl_dv . w at each sample
    std::vector<double> integrand;  ///< dl_dq . w + dl_dv . w' at each sample
    std::vector<double> integral;   ///< running integral of the integrand
    std::vector<double> values;     ///< boundary - integral
};

/// Evaluates K along the trajectory. w' comes from five-point finite
/// differences of the sampled field (one-sided stencils at the edges, O(h^2)
/// three-point fallback below five samples); the running integral starts at
/// the trajectory's own first sample. A constant field therefore has w' == 0
/// exactly, and the zero field yields values that are identically zero.
NonlocalTerms nonlocal_terms(const LagrangianSystem& sys, const Trajectory& traj,
                             const VariationField& field);

/// DriftReport over the K samples of nonlocal_terms. On an exact solution
/// the drift is pure discretisation noise; it shrinks by at least a factor 3
/// (in practice ~8) when h is halved.
DriftReport nonlocal_constant(const LagrangianSystem& sys, const Trajectory& traj,
                              const VariationField& field);

/// Half-plane specialisation of the vertical-translation invariant in the
/// form v2 / q2^2 + 2 E integral(1 / q2), with E frozen at the first sample.
/// Agrees with nonlocal_constant(..., q2_translation_field()) up to
/// integration error. Requires a 2-dof trajectory inside q2 > 0.
DriftReport q2_nonlocal_closed_form(const Trajectory& traj);

/// Residual of the linear equation hidden in the vertical-translation
/// invariant: with u = 1/q2 and E from the first sample, geodesics satisfy
/// u'' = 2 E u. Returns, per interior sample,
///
///   r[k] = -(u[k+1] - 2 u[k] + u[k-1]) / h^2 + 2 E u[k]
///
/// which is O(h^2) small on solutions and an effective non-geodesic detector
/// otherwise.
std::vector<double> check_linear_ode(const Trajectory& traj);

}  // namespace varmech
