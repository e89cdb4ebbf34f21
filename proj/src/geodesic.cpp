#include "varmech/geodesic.hpp"

#include <cmath>

#include "varmech/poincare.hpp"

namespace varmech {

namespace {

// c * e^x with the convention 0 * inf = 0, so dormant branches never poison
// the sum when the exponential overflows.
double branch(double c, double x) {
    return c > 0.0 ? c * std::exp(x) : 0.0;
}

}  // namespace

void require_valid_params(const GeodesicParams& gp) {
    const bool finite = std::isfinite(gp.energy) && std::isfinite(gp.momentum) &&
                        std::isfinite(gp.c1) && std::isfinite(gp.c2) &&
                        std::isfinite(gp.c3) && std::isfinite(gp.x0) &&
                        std::isfinite(gp.y0);
    if (!finite) throw InvalidParamsError("geodesic params contain a non-finite value");
    if (gp.energy < 0.0) throw InvalidParamsError("geodesic params need E >= 0");
    if (gp.c1 < 0.0 || gp.c2 < 0.0)
        throw InvalidParamsError("geodesic params need c1, c2 >= 0");
    if (!(gp.y0 > 0.0)) throw InvalidParamsError("geodesic anchor needs y0 > 0");
    if (gp.energy == 0.0) {
        if (gp.momentum != 0.0 || gp.c1 != 0.0 || gp.c2 != 0.0)
            throw InvalidParamsError("rest geodesic needs p = c1 = c2 = 0");
        return;
    }
    if (!(gp.c1 + gp.c2 > 0.0))
        throw InvalidParamsError("moving geodesic needs c1 + c2 > 0");
    if (gp.momentum == 0.0 && gp.c1 * gp.c2 != 0.0)
        throw InvalidParamsError("vertical geodesic needs one of c1, c2 to vanish");
    const double p2 = gp.momentum * gp.momentum;
    if (std::fabs(8.0 * gp.c1 * gp.c2 * gp.energy - p2) > 1e-10 * std::fmax(1.0, p2))
        throw InvalidParamsError("geodesic params break 8 c1 c2 E = p^2");
}

GeodesicParams fit_params(const State& s0) {
    require_valid_state(s0, 2);
    if (!(s0.q[1] > 0.0)) throw DomainError("fit_params: needs q2 > 0");

    GeodesicParams gp;
    gp.x0 = s0.q[0];
    gp.y0 = s0.q[1];
    gp.energy = poincare_energy(s0);
    if (gp.energy == 0.0) {
        gp.c3 = gp.x0;
        return gp;  // rest point: p = c1 = c2 = 0
    }
    gp.momentum = poincare_momentum(s0);

    const double w = std::sqrt(2.0 * gp.energy);
    const double sum = 1.0 / s0.q[1];
    const double diff = -s0.v[1] / (s0.q[1] * s0.q[1] * w);
    // Solve the larger coefficient from sum/diff, the smaller from the
    // product p^2 / (8E); subtracting nearly equal halves would lose it.
    const double prod = gp.momentum * gp.momentum / (8.0 * gp.energy);
    if (diff >= 0.0) {
        gp.c1 = (sum + diff) / 2.0;
        gp.c2 = prod / gp.c1;
    } else {
        gp.c2 = (sum - diff) / 2.0;
        gp.c1 = prod / gp.c2;
    }
    gp.c3 = gp.momentum != 0.0
                ? gp.x0 + gp.momentum / (2.0 * gp.c1 * w * (gp.c2 + gp.c1))
                : gp.x0;
    return gp;
}

double eval_q2(const GeodesicParams& gp, double t) {
    require_valid_params(gp);
    if (!(gp.energy > 0.0))
        throw InvalidParamsError("eval_q2: rest geodesics have no exponential form");
    const double w = std::sqrt(2.0 * gp.energy);
    return 1.0 / (branch(gp.c1, w * t) + branch(gp.c2, -w * t));
}

double eval_q1(const GeodesicParams& gp, double t) {
    require_valid_params(gp);
    if (gp.momentum == 0.0)
        throw InvalidParamsError("eval_q1: q1 is the constant c3 when p = 0");
    const double w = std::sqrt(2.0 * gp.energy);
    return gp.c3 - gp.momentum /
                       (2.0 * gp.c1 * w * (branch(gp.c1, 2.0 * w * t) + gp.c2));
}

State sample_state(const GeodesicParams& gp, double t) {
    require_valid_params(gp);
    if (gp.energy == 0.0) return State{t, {gp.x0, gp.y0}, {0.0, 0.0}};

    const double w = std::sqrt(2.0 * gp.energy);
    const double q2 = eval_q2(gp, t);
    const double q1 = gp.momentum != 0.0 ? eval_q1(gp, t) : gp.c3;
    // d/dt (1/q2) = w (c1 e^{wt} - c2 e^{-wt})
    const double slope = w * (branch(gp.c1, w * t) - branch(gp.c2, -w * t));
    const double v2 = -slope * q2 * q2;
    const double v1 = gp.momentum * q2 * q2;
    return State{t, {q1, q2}, {v1, v2}};
}

GeodesicShape classify(const GeodesicParams& gp) {
    require_valid_params(gp);
    if (gp.energy == 0.0) return Point{gp.x0, gp.y0};
    if (gp.momentum == 0.0) return VerticalLine{gp.x0};
    const double center =
        gp.c3 - gp.momentum / (2.0 * gp.c1 * gp.c2 * std::sqrt(8.0 * gp.energy));
    const double radius = std::sqrt(2.0 * gp.energy) / std::fabs(gp.momentum);
    return HalfCircle{center, radius};
}

double circle_residual(const Trajectory& traj, const GeodesicShape& shape) {
    require_valid_trajectory(traj);
    if (traj.states.front().dof() != 2)
        throw SizeError("circle_residual: needs a 2-dof trajectory");

    if (std::holds_alternative<Point>(shape))
        throw InvalidShapeError("circle_residual: a point has no supporting curve");

    if (const auto* line = std::get_if<VerticalLine>(&shape)) {
        double worst = 0.0;
        for (const State& s : traj.states)
            worst = std::fmax(worst, std::fabs(s.q[0] - line->x));
        return worst;
    }
    const auto& circle = std::get<HalfCircle>(shape);
    if (!(circle.radius > 0.0))
        throw InvalidShapeError("circle_residual: needs a positive radius");
    const double r2 = circle.radius * circle.radius;
    double worst = 0.0;
    for (const State& s : traj.states) {
        const double dx = s.q[0] - circle.center;
        worst = std::fmax(worst, std::fabs(dx * dx + s.q[1] * s.q[1] - r2) / r2);
    }
    return worst;
}

}  // namespace varmech
