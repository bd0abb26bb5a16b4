#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

using namespace alleedyn::cli;

int main(int argc, char** argv) {
    CLI::App app{"Dynamics toolkit for a three-species predator-prey system "
                 "with a strong Allee effect in the prey"};
    app.require_subcommand(1);

    std::string config_path;
    std::string expect_str;
    double tol = 1e-3;
    OutputOptions out;
    std::string axis1_str, axis2_str;
    std::string eq_label = "E3";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "run configuration file (JSON)")
            ->required();
        sub->add_option("--out", out.out_dir, "output directory");
        sub->add_option("--format", out.formats, "output formats")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "equilibria, spectra and degeneracy report");
    add_common(analyze);

    CLI::App* simulate = app.add_subcommand(
        "simulate", "integrate the system and write trajectory files");
    add_common(simulate);
    simulate->add_option("--expect", expect_str,
                         "expected limit 'x,y1,y2'; exit 4 unless reached");
    simulate->add_option("--tol", tol, "convergence tolerance for --expect");

    CLI::App* scan = app.add_subcommand(
        "scan", "classify an equilibrium across a parameter grid");
    add_common(scan);
    scan->add_option("--axis", axis1_str, "grid axis 'param:lo:hi:n'")->required();
    scan->add_option("--axis2", axis2_str, "optional second axis 'param:lo:hi:n'");
    scan->add_option("--eq", eq_label, "equilibrium label (E1..E4)")
        ->check(CLI::IsMember({"E1", "E2", "E3", "E4"}));

    CLI11_PARSE(app, argc, argv);

    try {
        const RunConfig cfg = load_config(config_path);
        if (analyze->parsed()) return cmd_analyze(cfg, out, std::cout);
        if (simulate->parsed()) {
            ExpectOptions exp;
            if (!expect_str.empty()) exp.expect = parse_expect(expect_str);
            exp.tol = tol;
            return cmd_simulate(cfg, exp, out, std::cout);
        }
        ScanOptions sopt;
        sopt.axis1 = parse_axis(axis1_str);
        if (!axis2_str.empty()) sopt.axis2 = parse_axis(axis2_str);
        sopt.equilibrium = eq_label;
        return cmd_scan(cfg, sopt, out, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const alleedyn::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
