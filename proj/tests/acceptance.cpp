// Acceptance gate: nine numbered end-to-end checks. Each prints exactly one
// [PASS]/[FAIL] line with the measured number next to its tolerance; the
// process exits nonzero if any check fails.
//
//   1  constancy of the boundary-minus-integral invariant for random fields
//   2  the horizontal-translation family reduces to the momentum p
//   3  the vertical-translation closed form agrees with the generic engine
//   4  1/q2 satisfies its linear second-order equation, at second order in h
//   5  trajectories land on the classified half-circles and vertical lines
//   6  the coefficient coupling 8 c1 c2 E = p^2 holds for every fitted state
//   7  E and p drift stays at rounding level across every run made above
//   8  the reference state reproduces its exact coefficients and endpoint
//   9  the CLI honours its exit codes and its SVG sits on the circle

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "varmech/geodesic.hpp"
#include "varmech/integrate.hpp"
#include "varmech/nonlocal.hpp"
#include "varmech/poincare.hpp"

#include "helpers.hpp"
#include "spawn.hpp"

using namespace varmech;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
                detail.c_str());
    if (!ok) ++failures;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", x);
    return buf;
}

// Every integration in criteria 1-5 funnels through here, so criterion 7 can
// audit conservation across all of them and criterion 6 sees every fit.
struct Audit {
    double e_drift = 0.0;
    double p_drift = 0.0;
    double identity = 0.0;
    int runs = 0;
} audit;

Trajectory tracked_run(const State& s0, double h = 1e-3, double t1 = 5.0) {
    const Trajectory traj = testutil::run(s0, h, t1);
    const double e0 = poincare_energy(s0);
    const double p0 = poincare_momentum(s0);
    double de = 0.0, dp = 0.0;
    for (const State& s : traj.states) {
        de = std::fmax(de, std::fabs(poincare_energy(s) - e0));
        dp = std::fmax(dp, std::fabs(poincare_momentum(s) - p0));
    }
    audit.e_drift = std::fmax(audit.e_drift, de / std::fmax(1.0, e0));
    audit.p_drift = std::fmax(audit.p_drift, dp / std::fmax(1.0, std::fabs(p0)));
    audit.runs += 1;

    const GeodesicParams gp = fit_params(s0);
    const double p2 = gp.momentum * gp.momentum;
    audit.identity =
        std::fmax(audit.identity, std::fabs(8.0 * gp.c1 * gp.c2 * gp.energy - p2) /
                                      std::fmax(1.0, p2));
    return traj;
}

// ─── criteria ────────────────────────────────────────────────────────────────

void criterion_1_arbitrary_families() {
    const LagrangianSystem sys = make_poincare_system();
    std::mt19937_64 states(101), fields(202);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Trajectory traj = tracked_run(testutil::flow_state(states));
        for (int j = 0; j < 10; ++j) {
            const double drift =
                nonlocal_constant(sys, traj, testutil::random_field(fields, j))
                    .relative_drift;
            worst = std::fmax(worst, drift);
        }
    }
    report(1, worst <= 1e-5,
           "invariant constant for 100 states x 10 random smooth fields, worst "
           "relative drift " +
               sci(worst) + " (tol 1e-05)");
}

void criterion_2_momentum_reduction() {
    const LagrangianSystem sys = make_poincare_system();
    std::mt19937_64 states(303);
    double worst_boundary = 0.0, worst_integrand = 0.0;
    for (int i = 0; i < 21; ++i) {
        const State s0 =
            i == 0 ? testutil::benchmark_state() : testutil::flow_state(states);
        const Trajectory traj = tracked_run(s0);
        const NonlocalTerms terms = nonlocal_terms(sys, traj, q1_translation_field());
        for (std::size_t k = 0; k < traj.size(); ++k) {
            worst_boundary =
                std::fmax(worst_boundary, std::fabs(terms.boundary[k] -
                                                    poincare_momentum(traj.states[k])));
            worst_integrand = std::fmax(worst_integrand, std::fabs(terms.integrand[k]));
        }
    }
    report(2, worst_boundary <= 1e-12 && worst_integrand <= 1e-10,
           "horizontal translations reduce to p: boundary-vs-momentum " +
               sci(worst_boundary) + " (tol 1e-12), integrand " +
               sci(worst_integrand) + " (tol 1e-10), 21 runs");
}

void criterion_3_closed_form_agreement() {
    const LagrangianSystem sys = make_poincare_system();
    std::mt19937_64 states(404);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Trajectory traj = tracked_run(testutil::flow_state(states));
        const DriftReport generic =
            nonlocal_constant(sys, traj, q2_translation_field());
        const DriftReport closed = q2_nonlocal_closed_form(traj);
        for (std::size_t k = 0; k < traj.size(); ++k)
            worst = std::fmax(worst, std::fabs(generic.values[k] - closed.values[k]) /
                                         closed.scale);
    }
    report(3, worst <= 2e-6,
           "specialised and generic vertical-translation invariants agree "
           "pointwise on 20 geodesics, worst relative gap " +
               sci(worst) + " (tol 2e-06)");
}

void criterion_4_linear_ode() {
    std::mt19937_64 states(505);
    const auto worst_residual = [](const Trajectory& traj) {
        double m = 0.0;
        for (double r : check_linear_ode(traj)) m = std::fmax(m, std::fabs(r));
        return m;
    };
    double worst = 0.0, ratio_lo = 1e30, ratio_hi = 0.0;
    int rated = 0;
    for (int i = 0; i < 11; ++i) {
        const State s0 =
            i == 0 ? testutil::benchmark_state() : testutil::flow_state(states);
        const double fine = worst_residual(tracked_run(s0, 1e-3));
        worst = std::fmax(worst, fine);
        // The h^2 residual term scales like rate^4; below rate 0.6 it sinks
        // to the rounding floor of the second difference (~3 eps / h^2), so a
        // convergence ratio is only measurable on the faster geodesics.
        if (std::sqrt(2.0 * poincare_energy(s0)) < 0.6) continue;
        const double coarse = worst_residual(tracked_run(s0, 2e-3));
        const double ratio = coarse / fine;
        ratio_lo = std::fmin(ratio_lo, ratio);
        ratio_hi = std::fmax(ratio_hi, ratio);
        ++rated;
    }
    report(4,
           worst <= 1e-4 && rated >= 3 && ratio_lo >= 3.0 && ratio_hi <= 5.0,
           "1/q2 solves its linear equation on 11 geodesics, worst residual " +
               sci(worst) + " (tol 1e-04); h-halving ratios on the " +
               std::to_string(rated) + " fast ones [" + sci(ratio_lo) + ", " +
               sci(ratio_hi) + "] (need [3, 5])");
}

void criterion_5_shapes() {
    std::mt19937_64 states(606), verticals(707);
    double worst_circle = 0.0, worst_radius = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const State s0 = testutil::flow_state(states, /*need_momentum=*/true);
        const Trajectory traj = tracked_run(s0);
        const GeodesicShape shape = classify(fit_params(s0));
        const auto& circle = std::get<HalfCircle>(shape);
        worst_circle = std::fmax(worst_circle, circle_residual(traj, shape));

        const double expect =
            std::sqrt(2.0 * poincare_energy(s0)) / std::fabs(poincare_momentum(s0));
        worst_radius =
            std::fmax(worst_radius, std::fabs(circle.radius - expect) / expect);
    }

    std::uniform_real_distribution<double> x(-10.0, 10.0), y(0.2, 5.0),
        rate(0.3, 1.0), sign(-1.0, 1.0);
    double worst_line = 0.0, worst_exp = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double q2 = y(verticals);
        const double v2 = (sign(verticals) < 0.0 ? -1.0 : 1.0) * rate(verticals) * q2;
        const State s0{0.0, {x(verticals), q2}, {0.0, v2}};
        const Trajectory traj = tracked_run(s0);
        const GeodesicParams gp = fit_params(s0);
        for (const State& s : traj.states) {
            worst_line = std::fmax(worst_line, std::fabs(s.q[0] - s0.q[0]));
            const double exact = eval_q2(gp, s.t);
            worst_exp = std::fmax(worst_exp, std::fabs(s.q[1] - exact) /
                                                 std::fmax(1.0, exact));
        }
    }

    report(5,
           worst_circle <= 1e-8 && worst_radius <= 1e-12 &&
               worst_line <= 1e-12 && worst_exp <= 1e-8,
           "1000 circles: residual " + sci(worst_circle) +
               " (tol 1e-08), radius gap " + sci(worst_radius) +
               " (tol 1e-12); 100 vertical lines: q1 drift " + sci(worst_line) +
               " (tol 1e-12), exponential gap " + sci(worst_exp) + " (tol 1e-08)");
}

void criterion_6_coupling_identity() {
    std::mt19937_64 g(808);
    double worst = audit.identity;  // every state fitted during criteria 1-5
    for (int i = 0; i < 10000; ++i) {
        const GeodesicParams gp = fit_params(testutil::box_state(g));
        const double p2 = gp.momentum * gp.momentum;
        worst = std::fmax(worst, std::fabs(8.0 * gp.c1 * gp.c2 * gp.energy - p2) /
                                     std::fmax(1.0, p2));
    }
    report(6, worst <= 1e-10,
           "8 c1 c2 E = p^2 for 10000 sampled states plus every state fitted "
           "above, worst scaled defect " +
               sci(worst) + " (tol 1e-10)");
}

void criterion_7_conservation() {
    const double worst = std::fmax(audit.e_drift, audit.p_drift);
    report(7, worst <= 1e-8,
           "E and p conserved across all " + std::to_string(audit.runs) +
               " integrations above, worst relative drift " + sci(worst) +
               " (tol 1e-08)");
}

void criterion_8_reference_values() {
    const GeodesicParams gp = fit_params(testutil::benchmark_state());
    const GeodesicShape shape = classify(gp);
    const auto& circle = std::get<HalfCircle>(shape);
    const bool exact = gp.energy == 0.5 && gp.momentum == 1.0 && gp.c1 == 0.5 &&
                       gp.c2 == 0.5 && gp.c3 == 1.0 && circle.center == 0.0 &&
                       circle.radius == 1.0;

    const Trajectory traj = tracked_run(testutil::benchmark_state());
    const State& end = traj.states.back();
    const double err = std::fmax(std::fabs(end.q[0] - std::tanh(5.0)),
                                 std::fabs(end.q[1] - 1.0 / std::cosh(5.0)));
    report(8, exact && err <= 1e-8,
           std::string("reference state: coefficients (0.5, 1, 0.5, 0.5, 1) and "
                       "unit circle ") +
               (exact ? "exact" : "WRONG") + ", endpoint error vs (tanh 5, sech 5) " +
               sci(err) + " (tol 1e-08)");
}

void criterion_9_cli() {
    const auto verify = testutil::run_cli("verify");
    const auto domain = testutil::run_cli("integrate --q 0,-1 --v 1,0");

    const char* tmpdir = std::getenv("TMPDIR");
    const std::string path =
        std::string(tmpdir && *tmpdir ? tmpdir : "/tmp") + "/halfplane_accept.svg";
    const auto plot = testutil::run_cli("plot --spec 0,1,1,0 --out '" + path + "'");

    double worst = 1e30;
    std::size_t points = 0;
    if (plot.exit_code == 0) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        const std::string svg = ss.str();
        const std::size_t open = svg.find("points=\"");
        const std::size_t end =
            open == std::string::npos ? std::string::npos : svg.find('"', open + 8);
        if (end != std::string::npos) {
            worst = 0.0;
            std::stringstream pts(svg.substr(open + 8, end - open - 8));
            std::string pair;
            while (std::getline(pts, pair, ' ')) {
                const std::size_t comma = pair.find(',');
                const double px = std::stod(pair.substr(0, comma));
                const double py = -std::stod(pair.substr(comma + 1));
                worst = std::fmax(worst, std::fabs(px * px + py * py - 1.0));
                ++points;
            }
        }
        std::remove(path.c_str());
    }

    report(9,
           verify.exit_code == 0 && domain.exit_code == 2 && plot.exit_code == 0 &&
               points >= 200 && worst <= 1e-3,
           "CLI: verify exit " + std::to_string(verify.exit_code) +
               " (want 0), domain violation exit " + std::to_string(domain.exit_code) +
               " (want 2), SVG circle residual " + sci(worst) + " over " +
               std::to_string(points) + " points (tol 1e-03)");
}

}  // namespace

int main(int, char** argv) {
    if (argv[1]) setenv("HALFPLANE_BIN", argv[1], 0);

    criterion_1_arbitrary_families();
    criterion_2_momentum_reduction();
    criterion_3_closed_form_agreement();
    criterion_4_linear_ode();
    criterion_5_shapes();
    criterion_6_coupling_identity();
    criterion_7_conservation();
    criterion_8_reference_values();
    criterion_9_cli();

    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
