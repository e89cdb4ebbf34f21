#include "varmech/format.hpp"

#include <charconv>
#include <system_error>

#include "varmech/poincare.hpp"

namespace varmech {

std::string fmt17(double x) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string fmt_short(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

bool parse_double(const std::string& text, double& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

Vec parse_csv_numbers(const std::string& text, std::size_t n) {
    Vec out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        double value = 0.0;
        if (!parse_double(item, value))
            throw SizeError("expected a number, got '" + item + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != n)
        throw SizeError("expected " + std::to_string(n) + " comma-separated numbers");
    return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    require_valid_trajectory(traj);
    if (traj.states.front().dof() != 2)
        throw SizeError("CSV export expects a 2-dof trajectory");
    os << "t,q1,q2,v1,v2,E,p\n";
    for (const State& s : traj.states) {
        os << fmt17(s.t) << ',' << fmt17(s.q[0]) << ',' << fmt17(s.q[1]) << ','
           << fmt17(s.v[0]) << ',' << fmt17(s.v[1]) << ','
           << fmt17(poincare_energy(s)) << ',' << fmt17(poincare_momentum(s))
           << '\n';
    }
}

}  // namespace varmech
