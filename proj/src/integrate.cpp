#include "varmech/integrate.hpp"

#include <cmath>
#include <stdexcept>

namespace varmech {

namespace {

// Probes the 2n axis-aligned face centres of the margin box around q.
bool box_inside_domain(const LagrangianSystem& sys, Vec& q, double margin) {
    if (!sys.domain_ok) return true;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double qi = q[i];
        q[i] = qi + margin;
        const bool hi = sys.domain_ok(q);
        q[i] = qi - margin;
        const bool lo = sys.domain_ok(q);
        q[i] = qi;
        if (!hi || !lo) return false;
    }
    return true;
}

}  // namespace

Trajectory integrate_el(const LagrangianSystem& sys, const State& s0,
                        const IntegrationConfig& cfg) {
    require_valid_state(s0, sys.n);
    if (!(cfg.h > 0.0) || !std::isfinite(cfg.h) || !std::isfinite(cfg.t1))
        throw std::invalid_argument("integrate_el: need finite t1 and h > 0");
    if (!(cfg.min_q_margin > 0.0) || !std::isfinite(cfg.min_q_margin))
        throw std::invalid_argument("integrate_el: min_q_margin must be positive");

    const double t0 = s0.t;
    const double span = cfg.t1 - t0;
    const long long steps = std::llround(span / cfg.h);
    if (steps < 2 ||
        std::fabs(static_cast<double>(steps) * cfg.h - span) >
            1e-9 * std::fmax(1.0, std::fabs(span)))
        throw std::invalid_argument("integrate_el: (t1 - t0) / h must round to an integer step count >= 2");

    const std::size_t n = sys.n;
    const double h = cfg.h;
    const auto grid = [&](long long k) { return t0 + static_cast<double>(k) * h; };

    Vec q = s0.q;
    Vec v = s0.v;
    Vec qs(n), vs(n);

    const auto check_stage = [&](Vec& qq, double t) {
        if (!sys.in_domain(qq))
            throw SingularityError("integrate_el: left the admissible domain near t = " +
                                       std::to_string(t),
                                   t);
    };
    const auto check_accept = [&](Vec& qq, const Vec& vv, double t) {
        if (!all_finite(qq) || !all_finite(vv))
            throw NumericError("integrate_el: non-finite state near t = " + std::to_string(t));
        check_stage(qq, t);
        if (!box_inside_domain(sys, qq, cfg.min_q_margin))
            throw SingularityError(
                "integrate_el: within min_q_margin of the domain boundary near t = " +
                    std::to_string(t),
                t);
    };
    const auto eval_acc = [&](double t, Vec& qq, Vec& vv) {
        check_stage(qq, t);
        Vec a = sys.acceleration(t, qq, vv);
        if (a.size() != n)
            throw SizeError("integrate_el: acceleration returned the wrong dimension");
        if (!all_finite(a))
            throw NumericError("integrate_el: non-finite acceleration near t = " +
                               std::to_string(t));
        return a;
    };

    check_accept(q, v, t0);

    Trajectory traj;
    traj.t0 = t0;
    traj.h = h;
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.push_back(State{t0, q, v});

    for (long long k = 0; k < steps; ++k) {
        const double t = grid(k);
        const double th = t + 0.5 * h;
        const double t1 = grid(k + 1);

        const Vec a1 = eval_acc(t, q, v);
        for (std::size_t i = 0; i < n; ++i) {
            qs[i] = q[i] + 0.5 * h * v[i];
            vs[i] = v[i] + 0.5 * h * a1[i];
        }
        const Vec a2 = eval_acc(th, qs, vs);
        for (std::size_t i = 0; i < n; ++i) {
            qs[i] = q[i] + 0.5 * h * (v[i] + 0.5 * h * a1[i]);
            vs[i] = v[i] + 0.5 * h * a2[i];
        }
        const Vec a3 = eval_acc(th, qs, vs);
        for (std::size_t i = 0; i < n; ++i) {
            qs[i] = q[i] + h * (v[i] + 0.5 * h * a2[i]);
            vs[i] = v[i] + h * a3[i];
        }
        const Vec a4 = eval_acc(t1, qs, vs);

        for (std::size_t i = 0; i < n; ++i) {
            q[i] += h * v[i] + h * h / 6.0 * (a1[i] + a2[i] + a3[i]);
            v[i] += h / 6.0 * (a1[i] + 2.0 * a2[i] + 2.0 * a3[i] + a4[i]);
        }
        check_accept(q, v, t1);
        traj.states.push_back(State{t1, q, v});
    }
    return traj;
}

std::vector<double> cumulative_integral(std::span<const double> values, double h) {
    if (values.size() < 2)
        throw SizeError("cumulative_integral: need at least 2 samples");
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("cumulative_integral: need h > 0");

    const std::size_t m = values.size();
    std::vector<double> out(m, 0.0);
    if (m < 5) {
        for (std::size_t k = 1; k < m; ++k)
            out[k] = out[k - 1] + h * (values[k - 1] + values[k]) / 2.0;
        return out;
    }
    for (std::size_t k = 2; k < m; k += 2)
        out[k] = out[k - 2] + h * (values[k - 2] + 4.0 * values[k - 1] + values[k]) / 3.0;
    for (std::size_t k = 1; k < m; k += 2)
        out[k] = out[k - 1] + h * (values[k - 1] + values[k]) / 2.0;
    return out;
}

}  // namespace varmech
