#include "varmech/nonlocal.hpp"

#include <cmath>

#include "varmech/poincare.hpp"

namespace varmech {

VariationField q1_translation_field() {
    return {[](double, const State&) { return Vec{1.0, 0.0}; }, "q1-translation"};
}

VariationField q2_translation_field() {
    return {[](double, const State&) { return Vec{0.0, 1.0}; }, "q2-translation"};
}

DriftReport make_drift_report(std::vector<double> values) {
    DriftReport rep;
    rep.values = std::move(values);
    double drift = 0.0, mag = 0.0;
    const double v0 = rep.values.empty() ? 0.0 : rep.values.front();
    for (double v : rep.values) {
        drift = std::fmax(drift, std::fabs(v - v0));
        mag = std::fmax(mag, std::fabs(v));
    }
    rep.max_drift = drift;
    rep.scale = std::fmax(1.0, mag);
    rep.relative_drift = rep.max_drift / rep.scale;
    return rep;
}

namespace {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// d/dt of per-sample vectors on the uniform grid. Five-point stencils keep
// the differentiation error far below the quadrature error downstream;
// below five samples a three-point O(h^2) set is the best available.
std::vector<Vec> grid_derivative(const std::vector<Vec>& f, double h) {
    const std::size_t m = f.size();
    const std::size_t n = f.front().size();
    std::vector<Vec> d(m, Vec(n));
    if (m < 5) {
        for (std::size_t i = 0; i < n; ++i) {
            d[0][i] = (-3.0 * f[0][i] + 4.0 * f[1][i] - f[2][i]) / (2.0 * h);
            for (std::size_t k = 1; k + 1 < m; ++k)
                d[k][i] = (f[k + 1][i] - f[k - 1][i]) / (2.0 * h);
            d[m - 1][i] =
                (3.0 * f[m - 1][i] - 4.0 * f[m - 2][i] + f[m - 3][i]) / (2.0 * h);
        }
        return d;
    }
    const double w = 12.0 * h;
    for (std::size_t i = 0; i < n; ++i) {
        d[0][i] = (-25.0 * f[0][i] + 48.0 * f[1][i] - 36.0 * f[2][i] +
                   16.0 * f[3][i] - 3.0 * f[4][i]) / w;
        d[1][i] = (-3.0 * f[0][i] - 10.0 * f[1][i] + 18.0 * f[2][i] -
                   6.0 * f[3][i] + f[4][i]) / w;
        for (std::size_t k = 2; k + 2 < m; ++k)
            d[k][i] = (f[k - 2][i] - 8.0 * f[k - 1][i] + 8.0 * f[k + 1][i] -
                       f[k + 2][i]) / w;
        d[m - 2][i] = (-f[m - 5][i] + 6.0 * f[m - 4][i] - 18.0 * f[m - 3][i] +
                       10.0 * f[m - 2][i] + 3.0 * f[m - 1][i]) / w;
        d[m - 1][i] = (3.0 * f[m - 5][i] - 16.0 * f[m - 4][i] + 36.0 * f[m - 3][i] -
                       48.0 * f[m - 2][i] + 25.0 * f[m - 1][i]) / w;
    }
    return d;
}

void require_half_plane_trajectory(const Trajectory& traj) {
    require_valid_trajectory(traj);
    if (traj.states.front().dof() != 2)
        throw SizeError("half-plane trajectory must have 2 dof");
    for (const State& s : traj.states)
        if (!(s.q[1] > 0.0))
            throw DomainError("half-plane trajectory has a sample with q2 <= 0");
}

}  // namespace

NonlocalTerms nonlocal_terms(const LagrangianSystem& sys, const Trajectory& traj,
                             const VariationField& field) {
    require_valid_trajectory(traj);
    const std::size_t m = traj.states.size();
    if (traj.states.front().dof() != sys.n)
        throw SizeError("nonlocal_terms: trajectory dimension does not match system");

    std::vector<Vec> w(m);
    for (std::size_t k = 0; k < m; ++k) {
        const State& s = traj.states[k];
        if (!sys.in_domain(s.q))
            throw DomainError("nonlocal_terms: sample outside the admissible domain");
        w[k] = field.delta_q(s.t, s);
        if (w[k].size() != sys.n)
            throw SizeError("nonlocal_terms: variation field returned the wrong dimension");
        if (!all_finite(w[k]))
            throw NumericError("nonlocal_terms: variation field returned a non-finite value");
    }
    const std::vector<Vec> wdot = grid_derivative(w, traj.h);

    NonlocalTerms terms;
    terms.boundary.resize(m);
    terms.integrand.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const State& s = traj.states[k];
        const Vec mom = sys.dl_dv(s.t, s.q, s.v);
        const Vec grad = sys.dl_dq(s.t, s.q, s.v);
        terms.boundary[k] = dot(mom, w[k]);
        terms.integrand[k] = dot(grad, w[k]) + dot(mom, wdot[k]);
    }
    terms.integral = cumulative_integral(terms.integrand, traj.h);
    terms.values.resize(m);
    for (std::size_t k = 0; k < m; ++k)
        terms.values[k] = terms.boundary[k] - terms.integral[k];
    return terms;
}

DriftReport nonlocal_constant(const LagrangianSystem& sys, const Trajectory& traj,
                              const VariationField& field) {
    return make_drift_report(nonlocal_terms(sys, traj, field).values);
}

DriftReport q2_nonlocal_closed_form(const Trajectory& traj) {
    require_half_plane_trajectory(traj);
    const std::size_t m = traj.states.size();
    const double two_e = 2.0 * poincare_energy(traj.states.front());

    std::vector<double> inv_q2(m);
    for (std::size_t k = 0; k < m; ++k) inv_q2[k] = 1.0 / traj.states[k].q[1];
    const std::vector<double> integral = cumulative_integral(inv_q2, traj.h);

    std::vector<double> values(m);
    for (std::size_t k = 0; k < m; ++k) {
        const State& s = traj.states[k];
        values[k] = s.v[1] / (s.q[1] * s.q[1]) + two_e * integral[k];
    }
    return make_drift_report(std::move(values));
}

std::vector<double> check_linear_ode(const Trajectory& traj) {
    require_half_plane_trajectory(traj);
    const std::size_t m = traj.states.size();
    const double two_e = 2.0 * poincare_energy(traj.states.front());
    const double h2 = traj.h * traj.h;

    std::vector<double> res(m - 2);
    for (std::size_t k = 1; k + 1 < m; ++k) {
        const double um = 1.0 / traj.states[k - 1].q[1];
        const double uc = 1.0 / traj.states[k].q[1];
        const double up = 1.0 / traj.states[k + 1].q[1];
        res[k - 1] = -(up - 2.0 * uc + um) / h2 + two_e * uc;
    }
    return res;
}

}  // namespace varmech
