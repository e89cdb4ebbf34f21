#include "varmech/verify.hpp"

#include <cmath>
#include <utility>

#include "varmech/nonlocal.hpp"
#include "varmech/poincare.hpp"

namespace varmech {

namespace {

DriftReport scalar_drift(const Trajectory& traj, double (*f)(const State&)) {
    std::vector<double> values;
    values.reserve(traj.states.size());
    for (const State& s : traj.states) values.push_back(f(s));
    return make_drift_report(std::move(values));
}

}  // namespace

VerificationReport verify_geodesic_run(const State& s0, const IntegrationConfig& cfg,
                                       double drift_tol, double residual_tol) {
    const LagrangianSystem sys = make_poincare_system();
    const Trajectory traj = integrate_el(sys, s0, cfg);

    VerificationReport rep;
    const auto add = [&rep](std::string name, double value, double tol) {
        const bool ok = value <= tol;
        rep.checks.push_back({std::move(name), value, tol, ok});
        rep.all_pass = rep.all_pass && ok;
    };

    add("energy drift", scalar_drift(traj, poincare_energy).relative_drift, drift_tol);
    add("momentum drift", scalar_drift(traj, poincare_momentum).relative_drift, drift_tol);

    const VariationField trig{
        [](double t, const State&) { return Vec{std::sin(t), std::cos(t)}; },
        "trig-field"};
    for (const VariationField& field :
         {q1_translation_field(), q2_translation_field(), trig})
        add("nonlocal drift (" + field.name + ")",
            nonlocal_constant(sys, traj, field).relative_drift, drift_tol);

    add("nonlocal drift (closed form)",
        q2_nonlocal_closed_form(traj).relative_drift, drift_tol);

    double worst = 0.0;
    for (double r : check_linear_ode(traj)) worst = std::fmax(worst, std::fabs(r));
    add("linear ODE residual", worst, residual_tol);

    return rep;
}

}  // namespace varmech
