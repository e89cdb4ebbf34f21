#pragma once

#include "varmech/core.hpp"
#include "varmech/lagrangian.hpp"

namespace varmech {

// Geodesic flow on the upper half-plane q2 > 0 with the hyperbolic metric:
//
//   L(q, v) = (v1^2 + v2^2) / (2 q2^2)
//
// Equations of motion:  a1 = 2 v1 v2 / q2,   a2 = (v2^2 - v1^2) / q2.

/// The half-plane system with analytic partials and the q2 > 0 domain guard.
LagrangianSystem make_poincare_system();

/// Conserved energy (v1^2 + v2^2) / (2 q2^2); zero exactly at rest states.
double poincare_energy(const State& s);

/// Conserved horizontal momentum v1 / q2^2, conjugate to q1-translations.
double poincare_momentum(const State& s);

}  // namespace varmech
