#include "csv.hpp"

#include <charconv>
#include <sstream>

#include "alleedyn/errors.hpp"

namespace alleedyn::cli {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string trajectory_csv(const Trajectory& t) {
    std::string out = "t,x,y1,y2\n";
    for (std::size_t i = 0; i < t.times.size(); ++i) {
        out += format_double(t.times[i]);
        out += ',';
        out += format_double(t.states[i].x);
        out += ',';
        out += format_double(t.states[i].y1);
        out += ',';
        out += format_double(t.states[i].y2);
        out += '\n';
    }
    return out;
}

namespace {

double parse_field(const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw Error("malformed CSV number: '" + s + "'");
    return v;
}

}  // namespace

Trajectory parse_trajectory_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "t,x,y1,y2")
        throw Error("missing trajectory CSV header");
    Trajectory t;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string f;
        double vals[4];
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(row, f, ',')) throw Error("short CSV row: '" + line + "'");
            vals[i] = parse_field(f);
        }
        if (std::getline(row, f, ',')) throw Error("extra fields in CSV row: '" + line + "'");
        t.times.push_back(vals[0]);
        t.states.push_back(State{vals[1], vals[2], vals[3]});
    }
    return t;
}

}  // namespace alleedyn::cli
