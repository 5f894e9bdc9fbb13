#pragma once

#include <string>
#include <vector>

#include "zetalab/record.hpp"

namespace zetalab {

enum class Command {
    Eval,
    Theta,
    Z,
    Zeros,
    Mean,
    Lemma2,
    Bound,
    Convexity,
    Growth,
    Search,
    Density,
    ExploreZ,
    Report,
};

enum class OutputFormat { Json, Csv, Both };

// Fully resolved invocation: flags, with values from --config merged in
// (command-line flags win).
struct RunConfig {
    Command command = Command::Eval;

    double sigma = 0.5;
    double t = 0.0;
    double T = 0.0;
    double H = 1.0;
    double delta = 1.0;
    double eps = 0.5;
    double tol = 1.0e-10;
    double grid_min = 0.0;
    double grid_max = 0.0;
    double grid_step = 0.0; // 0 = phase-locked default spacing
    double A = 0.0, B = 1.0, C = 0.0;
    double t0 = 0.0;
    double M = 100.0;
    double T_max = 0.0;
    double sample_step = 1.0;
    double slack = 0.15;
    double from = 0.0, to = 0.0, step = 0.0;
    std::vector<double> T_list;
    std::string target = "const:1";
    std::string weight = "unit";
    std::string norm = "L1";
    std::string mode = "Z";
    std::string out;
    std::string in;
    OutputFormat format = OutputFormat::Json;
    int threads = 0; // 0 = machine parallelism (or ZLAB_THREADS)
};

// Parses argv (including program name).  Throws UsageError on bad input.
RunConfig parse_args(const std::vector<std::string>& argv);

// Dispatches and writes outputs.  Returns the process exit code:
// 0 pass/informational, 1 fail verdict.
int run(const RunConfig& config);

// Full entry point with error handling: 2 on usage errors, 3 on numeric
// errors; errors emit one machine-readable JSON line on stderr.
int cli_main(int argc, char** argv);

} // namespace zetalab
