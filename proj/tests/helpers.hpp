#pragma once

// Shared fixtures for the test suites: deterministic samplers over the
// half-plane, smooth random variation fields, and exact sampling of analytic
// curves into Trajectory values.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "varmech/core.hpp"
#include "varmech/geodesic.hpp"
#include "varmech/integrate.hpp"
#include "varmech/nonlocal.hpp"
#include "varmech/poincare.hpp"

namespace testutil {

using varmech::GeodesicParams;
using varmech::State;
using varmech::Trajectory;
using varmech::Vec;

/// The reference geodesic: unit speed through (0, 1), solution
/// q(t) = (tanh t, sech t) on the unit half-circle.
inline State benchmark_state() { return State{0.0, {0.0, 1.0}, {1.0, 0.0}}; }

/// States across the full evaluation box. These may be arbitrarily stiff
/// (rates sqrt(2E) up to ~70), so they are meant for pure-evaluation checks,
/// never for time integration.
inline State box_state(std::mt19937_64& g) {
    std::uniform_real_distribution<double> x(-10.0, 10.0);
    std::uniform_real_distribution<double> y(0.1, 10.0);
    std::uniform_real_distribution<double> vel(-5.0, 5.0);
    const double q1 = x(g), q2 = y(g), v1 = vel(g), v2 = vel(g);
    return State{0.0, {q1, q2}, {v1, v2}};
}

/// States whose hyperbolic rate sqrt(2E) lies in [0.3, 1.0], so a t in [0, 5]
/// run moves through at most ~e^5 of contraction and every tested quantity
/// stays far inside double range. `need_momentum` bounds the direction away
/// from vertical, guaranteeing p != 0 with a non-degenerate margin.
inline State flow_state(std::mt19937_64& g, bool need_momentum = false) {
    std::uniform_real_distribution<double> x(-10.0, 10.0);
    std::uniform_real_distribution<double> y(0.2, 5.0);
    std::uniform_real_distribution<double> rate(0.3, 1.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    const double q1 = x(g), q2 = y(g);
    const double speed = rate(g) * q2;
    double theta = ang(g);
    if (need_momentum)
        while (std::fabs(std::cos(theta)) < 0.1) theta = ang(g);
    return State{0.0, {q1, q2}, {speed * std::cos(theta), speed * std::sin(theta)}};
}

/// Smooth scalar of time: cubic in t/5 plus one sinusoid, all coefficients
/// drawn from g. Bounded with bounded derivatives on [0, 5].
inline std::function<double(double)> smooth_scalar(std::mt19937_64& g) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> freq(0.25, 1.5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    const double a0 = coeff(g), a1 = coeff(g), a2 = coeff(g), a3 = coeff(g);
    const double amp = coeff(g), om = freq(g), ph = phase(g);
    return [=](double t) {
        const double u = t / 5.0;
        return a0 + u * (a1 + u * (a2 + u * a3)) + amp * std::sin(om * t + ph);
    };
}

/// Variation field with two independent smooth time-only components; no
/// symmetry of anything by construction.
inline varmech::VariationField random_field(std::mt19937_64& g, int tag) {
    const auto w1 = smooth_scalar(g);
    const auto w2 = smooth_scalar(g);
    return {[w1, w2](double t, const State&) { return Vec{w1(t), w2(t)}; },
            "random-smooth-" + std::to_string(tag)};
}

/// Integrates one half-plane state with the default guard.
inline Trajectory run(const State& s0, double h = 1e-3, double t1 = 5.0) {
    return varmech::integrate_el(varmech::make_poincare_system(), s0,
                                 varmech::IntegrationConfig{h, t1, 1e-9});
}

/// Samples analytic position/velocity functions on the exact uniform grid.
inline Trajectory sample_curve(double t0, double h, std::size_t steps,
                               const std::function<Vec(double)>& q,
                               const std::function<Vec(double)>& v) {
    Trajectory traj;
    traj.t0 = t0;
    traj.h = h;
    traj.states.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = t0 + static_cast<double>(k) * h;
        traj.states.push_back(State{t, q(t), v(t)});
    }
    return traj;
}

/// Samples a fitted geodesic's closed form on the exact uniform grid.
inline Trajectory sample_geodesic(const GeodesicParams& gp, double t0, double h,
                                  std::size_t steps) {
    Trajectory traj;
    traj.t0 = t0;
    traj.h = h;
    traj.states.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        traj.states.push_back(
            varmech::sample_state(gp, t0 + static_cast<double>(k) * h));
    return traj;
}

/// The reference trajectory (tanh t, sech t) sampled exactly.
inline Trajectory benchmark_exact(double t0, double h, std::size_t steps) {
    return sample_curve(
        t0, h, steps,
        [](double t) { return Vec{std::tanh(t), 1.0 / std::cosh(t)}; },
        [](double t) {
            const double sech = 1.0 / std::cosh(t);
            return Vec{sech * sech, -sech * std::tanh(t)};
        });
}

/// Relative drift of a conserved scalar along a trajectory.
inline double scalar_drift(const Trajectory& traj, double (*f)(const State&)) {
    std::vector<double> values;
    values.reserve(traj.states.size());
    for (const State& s : traj.states) values.push_back(f(s));
    return varmech::make_drift_report(std::move(values)).relative_drift;
}

}  // namespace testutil
