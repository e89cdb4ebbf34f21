#include "varmech/poincare.hpp"

namespace varmech {

LagrangianSystem make_poincare_system() {
    LagrangianSystem sys;
    sys.n = 2;
    sys.lagrangian = [](double, const Vec& q, const Vec& v) {
        return (v[0] * v[0] + v[1] * v[1]) / (2.0 * q[1] * q[1]);
    };
    sys.dl_dq = [](double, const Vec& q, const Vec& v) {
        const double y = q[1];
        return Vec{0.0, -(v[0] * v[0] + v[1] * v[1]) / (y * y * y)};
    };
    sys.dl_dv = [](double, const Vec& q, const Vec& v) {
        const double y2 = q[1] * q[1];
        return Vec{v[0] / y2, v[1] / y2};
    };
    sys.acceleration = [](double, const Vec& q, const Vec& v) {
        return Vec{2.0 * v[0] * v[1] / q[1], (v[1] * v[1] - v[0] * v[0]) / q[1]};
    };
    sys.domain_ok = [](const Vec& q) { return q[1] > 0.0; };
    return sys;
}

static void require_half_plane(const State& s) {
    require_valid_state(s, 2);
    if (!(s.q[1] > 0.0))
        throw DomainError("half-plane state needs q2 > 0");
}

double poincare_energy(const State& s) {
    require_half_plane(s);
    return (s.v[0] * s.v[0] + s.v[1] * s.v[1]) / (2.0 * s.q[1] * s.q[1]);
}

double poincare_momentum(const State& s) {
    require_half_plane(s);
    return s.v[0] / (s.q[1] * s.q[1]);
}

}  // namespace varmech
