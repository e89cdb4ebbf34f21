// halfplane: hyperbolic geodesics and their conservation-style audits from
// the command line. Subcommands: integrate, verify, geodesic, plot.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "varmech/format.hpp"
#include "varmech/geodesic.hpp"
#include "varmech/integrate.hpp"
#include "varmech/plot.hpp"
#include "varmech/poincare.hpp"
#include "varmech/verify.hpp"

namespace {

using namespace varmech;

State initial_state(const std::string& q_text, const std::string& v_text, double t0) {
    State s;
    s.t = t0;
    s.q = parse_csv_numbers(q_text, 2);
    s.v = parse_csv_numbers(v_text, 2);
    require_valid_state(s, 2);
    if (!(s.q[1] > 0.0))
        throw DomainError("initial state must satisfy q2 > 0");
    return s;
}

int cmd_integrate(const State& s0, const IntegrationConfig& cfg) {
    write_trajectory_csv(std::cout, integrate_el(make_poincare_system(), s0, cfg));
    return 0;
}

int cmd_verify(const State& s0, const IntegrationConfig& cfg) {
    const VerificationReport rep = verify_geodesic_run(s0, cfg);
    for (const VerificationCheck& c : rep.checks) {
        std::string name = c.name;
        name.resize(34, ' ');
        std::cout << name << fmt_short(c.value) << "  tol " << fmt_short(c.tolerance)
                  << (c.pass ? "  ok" : "  FAIL") << "\n";
    }
    std::cout << "verdict: " << (rep.all_pass ? "PASS" : "FAIL") << "\n";
    return rep.all_pass ? 0 : 1;
}

int cmd_geodesic(const State& s0) {
    const GeodesicParams gp = fit_params(s0);
    std::cout << "E=" << fmt_short(gp.energy) << " p=" << fmt_short(gp.momentum)
              << " c1=" << fmt_short(gp.c1) << " c2=" << fmt_short(gp.c2)
              << " c3=" << fmt_short(gp.c3) << "\n";
    struct Printer {
        void operator()(const Point& pt) const {
            std::cout << "point (" << fmt_short(pt.x) << "," << fmt_short(pt.y)
                      << ")\n";
        }
        void operator()(const VerticalLine& line) const {
            std::cout << "vertical-line x=" << fmt_short(line.x) << "\n";
        }
        void operator()(const HalfCircle& circle) const {
            std::cout << "half-circle center=" << fmt_short(circle.center)
                      << " radius=" << fmt_short(circle.radius) << "\n";
        }
    };
    std::visit(Printer{}, classify(gp));
    return 0;
}

int cmd_plot(const std::vector<std::string>& specs, const std::string& out,
             double t1) {
    std::vector<GeodesicParams> family;
    family.reserve(specs.size());
    for (const std::string& spec : specs) {
        const Vec numbers = parse_csv_numbers(spec, 4);
        State s;
        s.q = {numbers[0], numbers[1]};
        s.v = {numbers[2], numbers[3]};
        require_valid_state(s, 2);
        if (!(s.q[1] > 0.0))
            throw DomainError("plot spec must satisfy q2 > 0");
        family.push_back(fit_params(s));
    }
    const std::string svg = render_geodesics_svg(family, -t1, t1);
    std::ofstream file(out, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file: " + out);
    file << svg;
    file.close();
    if (!file)
        throw std::runtime_error("failed writing output file: " + out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesics of the hyperbolic half-plane: integrate, audit "
                 "invariants, fit closed forms, draw SVG families"};
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    std::string q_text = "0,1";
    std::string v_text = "1,0";
    double h = 1e-3;
    double t0 = 0.0;
    double t1 = 5.0;
    std::string out_path;
    std::vector<std::string> specs;

    const auto add_state_flags = [&](CLI::App* cmd) {
        cmd->add_option("--q", q_text, "initial position q1,q2")->capture_default_str();
        cmd->add_option("--v", v_text, "initial velocity v1,v2")->capture_default_str();
    };
    const auto add_window_flags = [&](CLI::App* cmd) {
        cmd->add_option("--h", h, "step size")->capture_default_str();
        cmd->add_option("--t0", t0, "start time")->capture_default_str();
        cmd->add_option("--t1", t1, "end time")->capture_default_str();
    };

    CLI::App* integrate =
        app.add_subcommand("integrate", "integrate one state, CSV on stdout");
    add_state_flags(integrate);
    add_window_flags(integrate);

    CLI::App* verify = app.add_subcommand(
        "verify", "integrate one state and audit every known invariant");
    add_state_flags(verify);
    add_window_flags(verify);

    CLI::App* geodesic = app.add_subcommand(
        "geodesic", "closed-form coefficients and shape of one state");
    add_state_flags(geodesic);

    CLI::App* plot =
        app.add_subcommand("plot", "render geodesics as SVG, sampled on [-t1, t1]");
    plot->add_option("--spec", specs, "geodesic initial state q1,q2,v1,v2")
        ->required();
    plot->add_option("--out", out_path, "output SVG path")->required();
    plot->add_option("--t1", t1, "half-width of the sampling window")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (*integrate)
            return cmd_integrate(initial_state(q_text, v_text, t0), {h, t1});
        if (*verify)
            return cmd_verify(initial_state(q_text, v_text, t0), {h, t1});
        if (*geodesic)
            return cmd_geodesic(initial_state(q_text, v_text, 0.0));
        return cmd_plot(specs, out_path, t1);
    } catch (const SizeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
