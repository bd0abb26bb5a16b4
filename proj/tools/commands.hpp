#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace alleedyn::cli {

struct OutputOptions {
    std::string out_dir;                  // empty: stdout only (analyze) / cwd (others)
    std::vector<std::string> formats;     // subset of csv,json,svg
};

struct ExpectOptions {
    std::optional<State> expect;
    double tol = 1e-3;
};

struct ScanAxis {
    std::string param;  // one of m,theta,s1,s2,alpha1,alpha2,beta1,beta2
    double lo, hi;
    int n;
};

struct ScanOptions {
    ScanAxis axis1;
    std::optional<ScanAxis> axis2;
    std::string equilibrium = "E3";  // E1..E4
};

/// Exit codes: 0 success, 3 numerical failure, 4 expectation not met.
/// Config problems throw ConfigError (mapped to 2 by the caller).
int cmd_analyze(const RunConfig& cfg, const OutputOptions& out, std::ostream& os);
int cmd_simulate(const RunConfig& cfg, const ExpectOptions& exp,
                 const OutputOptions& out, std::ostream& os);
int cmd_scan(const RunConfig& cfg, const ScanOptions& scan,
             const OutputOptions& out, std::ostream& os);

/// Parses "x,y1,y2"; throws ConfigError on malformed input.
State parse_expect(const std::string& s);

/// Parses "param:lo:hi:n"; throws ConfigError on malformed input.
ScanAxis parse_axis(const std::string& s);

}  // namespace alleedyn::cli
