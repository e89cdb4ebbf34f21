#pragma once

#include <functional>

#include "varmech/core.hpp"

namespace varmech {

/// First-order Lagrangian system with the Euler-Lagrange equations already
/// solved for the accelerations. All callbacks take (t, q, v); none may keep
/// mutable state, so a system can be shared freely across threads.
struct LagrangianSystem {
    using ScalarFn = std::function<double(double, const Vec&, const Vec&)>;
    using VecFn = std::function<Vec(double, const Vec&, const Vec&)>;
    using DomainFn = std::function<bool(const Vec&)>;

    std::size_t n = 0;
    ScalarFn lagrangian;
    VecFn dl_dq;          ///< gradient of L in the positions
    VecFn dl_dv;          ///< gradient of L in the velocities (momenta)
    VecFn acceleration;   ///< q-double-dot as a function of (t, q, v)
    DomainFn domain_ok;   ///< admissible-configuration predicate

    bool in_domain(const Vec& q) const { return !domain_ok || domain_ok(q); }
};

/// Builds a system from the Lagrangian alone, filling dl_dq / dl_dv with
/// central finite differences (step 1e-6 * max(1, |component|)). Intended for
/// quick experiments; analytic partials stay preferable where available.
LagrangianSystem numeric_partials_system(std::size_t n,
                                         LagrangianSystem::ScalarFn lagrangian,
                                         LagrangianSystem::VecFn acceleration,
                                         LagrangianSystem::DomainFn domain_ok = {});

/// Energy dl_dv(t,q,v) . v - L(t,q,v). Throws DomainError outside the
/// admissible set.
double energy(const LagrangianSystem& sys, const State& s);

/// Discrete Euler-Lagrange defect along a sampled trajectory: the central
/// difference of dl_dv across neighbouring samples minus dl_dq at the centre.
/// Returned per interior sample (size() - 2 entries); O(h^2) small exactly
/// when the samples solve the equations of motion.
std::vector<Vec> el_residual(const LagrangianSystem& sys, const Trajectory& traj);

}  // namespace varmech
