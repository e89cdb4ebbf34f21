#include "varmech/core.hpp"

#include <cmath>

namespace varmech {

bool all_finite(const Vec& x) {
    for (double xi : x)
        if (!std::isfinite(xi)) return false;
    return true;
}

void require_valid_state(const State& s, std::size_t n) {
    if (s.q.empty() || s.q.size() != s.v.size())
        throw SizeError("state needs matching non-empty q and v");
    if (n != 0 && s.q.size() != n)
        throw SizeError("state has " + std::to_string(s.q.size()) +
                        " dof, expected " + std::to_string(n));
    if (!std::isfinite(s.t) || !all_finite(s.q) || !all_finite(s.v))
        throw NumericError("state contains a non-finite component");
}

void require_valid_trajectory(const Trajectory& traj) {
    if (traj.states.size() < 3)
        throw SizeError("trajectory needs at least 3 samples");
    if (!(traj.h > 0.0) || !std::isfinite(traj.h) || !std::isfinite(traj.t0))
        throw NumericError("trajectory needs finite t0 and h > 0");
    const std::size_t n = traj.states.front().dof();
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        require_valid_state(traj.states[k], n);
        if (traj.states[k].t != traj.t0 + static_cast<double>(k) * traj.h)
            throw NumericError("trajectory times are off the uniform grid");
    }
}

}  // namespace varmech
