#include "varmech/lagrangian.hpp"

#include <cmath>
#include <utility>

namespace varmech {

LagrangianSystem numeric_partials_system(std::size_t n,
                                         LagrangianSystem::ScalarFn lagrangian,
                                         LagrangianSystem::VecFn acceleration,
                                         LagrangianSystem::DomainFn domain_ok) {
    LagrangianSystem sys;
    sys.n = n;
    sys.lagrangian = std::move(lagrangian);
    sys.acceleration = std::move(acceleration);
    sys.domain_ok = std::move(domain_ok);

    const auto L = sys.lagrangian;
    sys.dl_dq = [L](double t, const Vec& q, const Vec& v) {
        Vec g(q.size());
        Vec qp = q;
        for (std::size_t i = 0; i < q.size(); ++i) {
            const double step = 1e-6 * std::max(1.0, std::fabs(q[i]));
            qp[i] = q[i] + step;
            const double hi = L(t, qp, v);
            qp[i] = q[i] - step;
            const double lo = L(t, qp, v);
            qp[i] = q[i];
            g[i] = (hi - lo) / (2.0 * step);
        }
        return g;
    };
    sys.dl_dv = [L](double t, const Vec& q, const Vec& v) {
        Vec g(v.size());
        Vec vp = v;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double step = 1e-6 * std::max(1.0, std::fabs(v[i]));
            vp[i] = v[i] + step;
            const double hi = L(t, q, vp);
            vp[i] = v[i] - step;
            const double lo = L(t, q, vp);
            vp[i] = v[i];
            g[i] = (hi - lo) / (2.0 * step);
        }
        return g;
    };
    return sys;
}

double energy(const LagrangianSystem& sys, const State& s) {
    require_valid_state(s, sys.n);
    if (!sys.in_domain(s.q))
        throw DomainError("energy: configuration outside the admissible domain");
    const Vec p = sys.dl_dv(s.t, s.q, s.v);
    double e = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) e += p[i] * s.v[i];
    return e - sys.lagrangian(s.t, s.q, s.v);
}

std::vector<Vec> el_residual(const LagrangianSystem& sys, const Trajectory& traj) {
    require_valid_trajectory(traj);
    const std::size_t m = traj.states.size();
    if (traj.states.front().dof() != sys.n)
        throw SizeError("el_residual: trajectory dimension does not match system");
    for (const State& s : traj.states)
        if (!sys.in_domain(s.q))
            throw DomainError("el_residual: sample outside the admissible domain");

    std::vector<Vec> momenta(m);
    for (std::size_t k = 0; k < m; ++k) {
        const State& s = traj.states[k];
        momenta[k] = sys.dl_dv(s.t, s.q, s.v);
    }

    std::vector<Vec> res(m - 2, Vec(sys.n));
    for (std::size_t k = 1; k + 1 < m; ++k) {
        const State& s = traj.states[k];
        const Vec grad = sys.dl_dq(s.t, s.q, s.v);
        for (std::size_t i = 0; i < sys.n; ++i)
            res[k - 1][i] =
                (momenta[k + 1][i] - momenta[k - 1][i]) / (2.0 * traj.h) - grad[i];
    }
    return res;
}

}  // namespace varmech
