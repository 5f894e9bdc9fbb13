#pragma once

#include <vector>

#include "zetalab/special_functions.hpp"

namespace zetalab {

// One critical-line zero located by bisection on Z(t).
struct ZeroRecord {
    double ordinate = 0.0;
    double bracket_width = 0.0;
    double z_left = 0.0;
    double z_right = 0.0;
};

struct ScanResult {
    std::vector<ZeroRecord> zeros;
    // Riemann-von Mangoldt estimate over the scanned range.
    double estimated_count = 0.0;
    // Set when the estimate exceeds the observed count by more than one:
    // missed-zero suspicion.
    bool grid_too_coarse = false;
};

struct WindowCount {
    double T = 0.0;
    double delta = 0.0;
    long observed = 0;
    double predicted = 0.0; // delta * log(T/2pi) / (2pi)
    double predicted_logT = 0.0; // delta * log(T) / (2pi), leading-order variant
};

// Default grid step: half the mean zero gap at height T.
double default_grid_step(double t_hi);

// Sign-change scan of Z on [t_lo, t_hi] with bisection refinement.  Each
// returned ordinate g satisfies |Z(g)| <= 1e-6 and
// bracket_width <= 1e-9 * max(1, g).
ScanResult scan_zero_ordinates(double t_lo, double t_hi, double grid_step);

// Riemann-von Mangoldt main term theta(T)/pi + 1.
double estimate_N(double T);

WindowCount window_zero_count(double T, double delta);

// CSV export: "ordinate,bracket_width" with 12 significant digits.
std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros);

} // namespace zetalab
