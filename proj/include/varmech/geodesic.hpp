#pragma once

#include <variant>

#include "varmech/core.hpp"

namespace varmech {

// Half-plane geodesics in closed form. With w = sqrt(2E) the vertical
// coordinate of any non-rest geodesic is
//
//   q2(t) = 1 / (c1 e^{w t} + c2 e^{-w t}),   c1, c2 >= 0,  c1 + c2 > 0,
//
// and the coefficients satisfy 8 c1 c2 E = p^2 with p the horizontal
// momentum. For p != 0 the horizontal coordinate follows from v1 = p q2^2:
//
//   q1(t) = c3 - p / (2 c1 w (c2 + c1 e^{2 w t})).

/// Closed-form coefficients of one geodesic, together with the anchor point
/// (x0, y0) = q(0) that fixes the degenerate branches. Rest states use
/// c1 = c2 = 0; for p = 0 the horizontal coordinate is the constant c3 = x0
/// and exactly one of c1, c2 vanishes (the decaying branch).
struct GeodesicParams {
    double energy = 0.0;    ///< E >= 0
    double momentum = 0.0;  ///< p, zero exactly for vertical lines and rest
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double x0 = 0.0;
    double y0 = 0.0;
};

/// Throws InvalidParamsError when the constraints above fail, including the
/// coupling |8 c1 c2 E - p^2| <= 1e-10 max(1, p^2).
void require_valid_params(const GeodesicParams& gp);

/// Fits the closed form to one admissible state taken as the t = 0 anchor.
/// The larger of c1, c2 comes from the linear conditions
///   c1 + c2 = 1 / q2(0),   c1 - c2 = -v2(0) / (q2(0)^2 sqrt(2E)),
/// the smaller from the product p^2 / (8E), which avoids cancellation and
/// keeps the coupling identity tight. Throws DomainError off the half-plane.
GeodesicParams fit_params(const State& s0);

/// Vertical coordinate of the closed form; requires E > 0.
double eval_q2(const GeodesicParams& gp, double t);

/// Horizontal coordinate of the closed form; requires p != 0. Evaluated as
/// c3 - p / (2 c1 w (c1 e^{2wt} + c2)), which decays cleanly to c3 for large
/// t instead of overflowing.
double eval_q1(const GeodesicParams& gp, double t);

/// Full state of the fitted geodesic at time t, velocities included
/// (v1 = p q2^2, v2 from differentiating q2 analytically).
State sample_state(const GeodesicParams& gp, double t);

struct Point {
    double x = 0.0;
    double y = 0.0;
};
struct VerticalLine {
    double x = 0.0;
};
struct HalfCircle {
    double center = 0.0;  ///< abscissa of the centre on the q2 = 0 axis
    double radius = 0.0;
};

/// Geometric support of a geodesic.
using GeodesicShape = std::variant<Point, VerticalLine, HalfCircle>;

/// E = 0 -> Point, p = 0 -> VerticalLine, otherwise the half circle with
///   center = c3 - p / (2 c1 c2 sqrt(8E)),   radius = sqrt(2E) / |p|.
GeodesicShape classify(const GeodesicParams& gp);

/// Worst deviation of the trajectory from the shape: for a half circle
/// max |(q1 - c)^2 + q2^2 - r^2| / r^2, for a vertical line max |q1 - x|.
/// Points carry no usable residual and raise InvalidShapeError.
double circle_residual(const Trajectory& traj, const GeodesicShape& shape);

}  // namespace varmech
