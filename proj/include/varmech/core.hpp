#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace varmech {

using Vec = std::vector<double>;

// ─── error taxonomy ──────────────────────────────────────────────────────────

/// Configuration left the admissible set (or was outside it to begin with).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched or empty dimensions.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// An integration run hit the domain boundary; `t_fail` is the first bad time.
struct SingularityError : std::runtime_error {
    double t_fail;
    SingularityError(const std::string& what, double t)
        : std::runtime_error(what), t_fail(t) {}
};

/// NaN or infinity appeared where a finite value is required.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed-form parameter set violates its own constraints.
struct InvalidParamsError : std::runtime_error {
    explicit InvalidParamsError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation not defined for this shape variant.
struct InvalidShapeError : std::runtime_error {
    explicit InvalidShapeError(const std::string& what) : std::runtime_error(what) {}
};

// ─── phase-space state and sampled trajectories ──────────────────────────────

/// Point of the tangent bundle at time t: positions q and velocities v,
/// equal length n >= 1.
struct State {
    double t = 0.0;
    Vec q;
    Vec v;

    std::size_t dof() const { return q.size(); }
};

/// Throws SizeError / NumericError unless s has matching finite q, v of the
/// expected dimension (pass 0 to accept any positive dimension).
void require_valid_state(const State& s, std::size_t n = 0);

/// Uniformly sampled solution curve. states[k].t == t0 + k*h exactly, with
/// the product form (never repeated addition), so grids are reproducible.
struct Trajectory {
    double t0 = 0.0;
    double h = 0.0;
    std::vector<State> states;

    std::size_t size() const { return states.size(); }
};

/// Validates the grid invariants: h > 0, at least 3 samples, consistent
/// dimensions, times on the exact grid. Throws SizeError / NumericError.
void require_valid_trajectory(const Trajectory& traj);

bool all_finite(const Vec& x);

}  // namespace varmech
