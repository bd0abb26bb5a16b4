#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "alleedyn/equilibria.hpp"
#include "alleedyn/integrate.hpp"
#include "alleedyn/stability.hpp"
#include "csv.hpp"
#include "svg.hpp"

namespace alleedyn::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json state_to_json(const State& s) {
    return json::array({s.x, s.y1, s.y2});
}

json conditions_to_json(const std::vector<Condition>& cs) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back({{"name", c.name}, {"holds", c.holds}});
    return arr;
}

json spectrum_to_json(const SpectrumReport& r) {
    json eigs = json::array();
    for (const auto& l : r.eigenvalues)
        eigs.push_back({{"re", l.real()}, {"im", l.imag()}});
    json j{
        {"eigenvalues", eigs},
        {"classification", to_string(r.classification)},
        {"zero_tol", r.zero_tol},
        {"cubic", {{"a2", r.cubic.a2}, {"a1", r.cubic.a1}, {"a0", r.cubic.a0}}},
        {"conditions", conditions_to_json(r.conditions)},
    };
    if (r.condition_discrepancy) j["discrepancy"] = *r.condition_discrepancy;
    return j;
}

json equilibrium_to_json(const ModelParams& p, const Equilibrium& e) {
    json j{
        {"label", to_string(e.label)},
        {"point", state_to_json(e.point)},
        {"feasible", e.feasible},
        {"existence_conditions", conditions_to_json(e.existence_conditions)},
    };
    const bool finite = std::isfinite(e.point.x) && std::isfinite(e.point.y1)
                        && std::isfinite(e.point.y2);
    if (finite) {
        try {
            j["spectrum"] = spectrum_to_json(classify(p, e));
        } catch (const NotAnEquilibrium& ex) {
            j["spectrum"] = nullptr;
            j["spectrum_error"] = ex.what();
        }
    } else {
        j["spectrum"] = nullptr;
    }
    return j;
}

bool is_constrained_family(const ModelParams& p, ConstrainedFamily& f) {
    if (p.beta1 != p.beta2 || p.theta != 1.0 || p.s1 != p.s2) return false;
    if (std::abs(p.m - 2.0 * p.s1 / p.beta1) > 1e-12) return false;
    f = {p.s1, p.beta1, p.alpha1, p.alpha2};
    return true;
}

json degeneracy_to_json(const ConstrainedFamily& f) {
    json j{
        {"discriminant", discriminant(f)},
        {"structure", to_string(degenerate_structure(f.s1, f.beta1, f.alpha2, f.alpha1))},
    };
    try {
        j["alpha1_star"] = alpha1_star(f.s1, f.beta1, f.alpha2);
    } catch (const Error& e) {
        j["alpha1_star_error"] = e.what();
    }
    try {
        auto [lo, hi] = alpha2_star_window(f.s1, f.beta1);
        j["alpha2_window"] = json::array({lo, hi});
    } catch (const Error& e) {
        j["alpha2_window_error"] = e.what();
    }
    for (auto [which, key] : {std::pair{SaddleNodeSource::E3_case_v, "g200_E3"},
                              std::pair{SaddleNodeSource::E4_case_iii, "g200_E4"}}) {
        try {
            j[key] = saddle_node_coefficient(expand_family(f), which).g200;
        } catch (const Error&) {
            // eigenvalue not at zero here; nothing to report
        }
    }
    return j;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

bool wants(const OutputOptions& out, const std::string& fmt) {
    return std::find(out.formats.begin(), out.formats.end(), fmt) != out.formats.end();
}

fs::path ensure_dir(const OutputOptions& out) {
    fs::path dir = out.out_dir.empty() ? fs::path(".") : fs::path(out.out_dir);
    fs::create_directories(dir);
    return dir;
}

double* param_field(ModelParams& p, const std::string& name) {
    if (name == "m") return &p.m;
    if (name == "theta") return &p.theta;
    if (name == "s1") return &p.s1;
    if (name == "s2") return &p.s2;
    if (name == "alpha1") return &p.alpha1;
    if (name == "alpha2") return &p.alpha2;
    if (name == "beta1") return &p.beta1;
    if (name == "beta2") return &p.beta2;
    return nullptr;
}

int thread_cap() {
    if (const char* env = std::getenv("ALLEEDYN_THREADS")) {
        int n = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), n);
        if (ec == std::errc{} && n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string grid_label(const ModelParams& base, const ScanOptions& scan,
                       double v1, std::optional<double> v2) {
    ModelParams p = base;
    *param_field(p, scan.axis1.param) = v1;
    if (v2) *param_field(p, scan.axis2->param) = *v2;
    try {
        validate(p);
    } catch (const Error&) {
        return "InvalidParams";
    }
    for (const Equilibrium& e : boundary_equilibria(p)) {
        if (to_string(e.label) != scan.equilibrium) continue;
        if (!e.feasible) return "Infeasible";
        try {
            return to_string(classify(p, e).classification);
        } catch (const Error&) {
            return "SpectrumError";
        }
    }
    return "Unknown";
}

std::vector<double> grid(const ScanAxis& ax) {
    std::vector<double> g(ax.n);
    for (int i = 0; i < ax.n; ++i)
        g[i] = ax.n == 1 ? ax.lo : ax.lo + (ax.hi - ax.lo) * i / (ax.n - 1);
    return g;
}

}  // namespace

State parse_expect(const std::string& s) {
    double v[3];
    const char* p = s.data();
    const char* end = s.data() + s.size();
    for (int i = 0; i < 3; ++i) {
        auto [ptr, ec] = std::from_chars(p, end, v[i]);
        if (ec != std::errc{}) throw ConfigError("--expect must be 'x,y1,y2'");
        p = ptr;
        if (i < 2) {
            if (p == end || *p != ',') throw ConfigError("--expect must be 'x,y1,y2'");
            ++p;
        }
    }
    if (p != end) throw ConfigError("--expect must be 'x,y1,y2'");
    return State{v[0], v[1], v[2]};
}

ScanAxis parse_axis(const std::string& s) {
    ScanAxis ax;
    const auto c1 = s.find(':');
    const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    const auto c3 = s.find(':', c2 == std::string::npos ? c2 : c2 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos)
        throw ConfigError("--axis must be 'param:lo:hi:n'");
    ax.param = s.substr(0, c1);
    ModelParams probe{};
    if (!param_field(probe, ax.param))
        throw ConfigError("unknown scan parameter '" + ax.param + "'");
    try {
        ax.lo = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
        ax.hi = std::stod(s.substr(c2 + 1, c3 - c2 - 1));
        ax.n = std::stoi(s.substr(c3 + 1));
    } catch (const std::exception&) {
        throw ConfigError("--axis must be 'param:lo:hi:n' with numeric bounds");
    }
    if (ax.n < 1) throw ConfigError("--axis: n must be >= 1");
    if (!(ax.lo <= ax.hi)) throw ConfigError("--axis: need lo <= hi");
    return ax;
}

int cmd_analyze(const RunConfig& cfg, const OutputOptions& out, std::ostream& os) {
    const ModelParams& p = cfg.params;
    json report{{"params", params_to_json(p)}};

    json eqs = json::array();
    for (const Equilibrium& e : boundary_equilibria(p))
        eqs.push_back(equilibrium_to_json(p, e));
    for (const Equilibrium& e : internal_equilibria_general(p))
        eqs.push_back(equilibrium_to_json(p, e));
    report["equilibria"] = eqs;

    ConstrainedFamily fam;
    if (is_constrained_family(p, fam)) {
        report["constrained_family"] = degeneracy_to_json(fam);
        json internal = json::array();
        for (const Equilibrium& e : internal_equilibria_constrained(fam))
            internal.push_back(equilibrium_to_json(p, e));
        report["constrained_family"]["internal_equilibria"] = internal;
    }

    const std::string text = report.dump(2) + "\n";
    if (!out.out_dir.empty())
        write_file(ensure_dir(out) / "report.json", text);
    os << text;
    return 0;
}

int cmd_simulate(const RunConfig& cfg, const ExpectOptions& exp,
                 const OutputOptions& out, std::ostream& os) {
    if (!cfg.init) throw ConfigError("'init' is required for simulate");

    Trajectory traj;
    try {
        traj = integrate(cfg.params, *cfg.init, cfg.integration);
    } catch (const Error& e) {
        os << json{{"error", e.what()}}.dump(2) << "\n";
        return 3;
    }

    const fs::path dir = ensure_dir(out);
    const bool any_named = !out.formats.empty();
    if (!any_named || wants(out, "csv"))
        write_file(dir / "trajectory.csv", trajectory_csv(traj));
    if (wants(out, "svg"))
        write_file(dir / "trajectory.svg", trajectory_svg(traj));

    json summary{
        {"t_end", traj.times.back()},
        {"final", state_to_json(traj.states.back())},
        {"samples", traj.times.size()},
        {"method", to_string(traj.meta.method)},
        {"clamp_warning", traj.meta.clamp_warning},
    };

    int rc = 0;
    if (exp.expect) {
        const ConvergenceResult conv = detect_convergence(traj, *exp.expect, exp.tol);
        summary["expect"] = state_to_json(*exp.expect);
        summary["tol"] = exp.tol;
        summary["converged"] = conv.converged;
        if (conv.time) summary["convergence_time"] = *conv.time;
        if (!conv.converged) rc = 4;
    }

    // wall-clock metadata lives beside the data, never inside it
    json meta{{"method", to_string(traj.meta.method)},
              {"rtol", traj.meta.rtol},
              {"atol", traj.meta.atol},
              {"generated_at_unix",
               std::chrono::duration_cast<std::chrono::seconds>(
                   std::chrono::system_clock::now().time_since_epoch()).count()}};
    if (!any_named || wants(out, "json"))
        write_file(dir / "meta.json", meta.dump(2) + "\n");

    os << summary.dump(2) << "\n";
    return rc;
}

int cmd_scan(const RunConfig& cfg, const ScanOptions& scan,
             const OutputOptions& out, std::ostream& os) {
    const std::vector<double> g1 = grid(scan.axis1);
    const std::vector<double> g2 =
        scan.axis2 ? grid(*scan.axis2) : std::vector<double>{};
    const std::size_t n1 = g1.size();
    const std::size_t n2 = scan.axis2 ? g2.size() : 1;
    const std::size_t total = n1 * n2;

    std::vector<std::string> labels(total);
    const int workers = std::min<int>(thread_cap(), static_cast<int>(total));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < total;) {
            const double v1 = g1[i / n2];
            const std::optional<double> v2 =
                scan.axis2 ? std::optional<double>(g2[i % n2]) : std::nullopt;
            labels[i] = grid_label(cfg.params, scan, v1, v2);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::string csv = scan.axis2
        ? scan.axis1.param + "," + scan.axis2->param + ",label\n"
        : scan.axis1.param + ",label\n";
    for (std::size_t i = 0; i < total; ++i) {
        csv += format_double(g1[i / n2]);
        if (scan.axis2) csv += "," + format_double(g2[i % n2]);
        csv += "," + labels[i] + "\n";
    }

    // grid edges where the label flips: the stability-boundary estimate
    json boundaries = json::array();
    auto edge = [&](std::size_t a, std::size_t b, const char* axis) {
        json e{{"axis", axis},
               {"from", labels[a]},
               {"to", labels[b]}};
        e[scan.axis1.param] = scan.axis2
            ? json::array({g1[a / n2], g1[b / n2]})
            : json::array({g1[a], g1[b]});
        if (scan.axis2)
            e[scan.axis2->param] = json::array({g2[a % n2], g2[b % n2]});
        boundaries.push_back(e);
    };
    for (std::size_t i = 0; i + 1 < n1; ++i)
        for (std::size_t k = 0; k < n2; ++k)
            if (labels[i * n2 + k] != labels[(i + 1) * n2 + k])
                edge(i * n2 + k, (i + 1) * n2 + k, "axis1");
    if (scan.axis2)
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t k = 0; k + 1 < n2; ++k)
                if (labels[i * n2 + k] != labels[i * n2 + k + 1])
                    edge(i * n2 + k, i * n2 + k + 1, "axis2");

    if (!out.out_dir.empty())
        write_file(ensure_dir(out) / "scan.csv", csv);

    json report{{"equilibrium", scan.equilibrium},
                {"grid_points", total},
                {"boundaries", boundaries},
                {"csv", csv}};
    os << report.dump(2) << "\n";
    return 0;
}

}  // namespace alleedyn::cli
