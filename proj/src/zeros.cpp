#include "zetalab/zeros.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace zetalab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

double theta_over_pi_plus_one(double t) {
    return riemann_siegel_theta(t) / kPi + 1.0;
}

EvalAccuracy coarse_acc() {
    EvalAccuracy acc;
    acc.abs_tol = 1.0e-3; // enables the Riemann-Siegel fast path at height
    return acc;
}

// Bisection until the bracket is tight and |Z| at the midpoint is small.
// Coarse evaluations only narrow the bracket down to a width where their
// error could start flipping signs; the final bracket is re-derived and
// bisected at full accuracy so the ordinate converges to the true zero.
ZeroRecord refine_zero(double a, double b, double za, double zb) {
    const EvalAccuracy coarse = coarse_acc();
    while (b - a > 2.0e-2) {
        const double mid = 0.5 * (a + b);
        const double zm = hardy_z(mid, coarse);
        if ((zm < 0.0) == (za < 0.0)) {
            a = mid;
            za = zm;
        } else {
            b = mid;
            zb = zm;
        }
    }

    // Re-bracket with full accuracy on a padded grid around the coarse
    // bracket (the coarse phase can be off by its evaluation error).
    const double pad = b - a;
    const double lo = std::max(0.5 * (a + b) - 1.5 * pad, 1.0e-3);
    const double hi = 0.5 * (a + b) + 1.5 * pad;
    const EvalAccuracy tight = EvalAccuracy::for_height(hi);
    const int n = 12;
    double prev_t = lo, prev_z = hardy_z(lo, tight);
    for (int i = 1; i <= n; ++i) {
        const double t = lo + (hi - lo) * i / n;
        const double z = hardy_z(t, tight);
        if ((z < 0.0) != (prev_z < 0.0)) {
            a = prev_t;
            b = t;
            za = prev_z;
            zb = z;
            break;
        }
        prev_t = t;
        prev_z = z;
    }

    double z_mid = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (a + b);
        const double wtol = 0.5e-9 * std::max(1.0, mid);
        z_mid = hardy_z(mid, tight);
        if (b - a <= wtol && std::abs(z_mid) <= 5.0e-7) break;
        if ((z_mid < 0.0) == (za < 0.0)) {
            a = mid;
            za = z_mid;
        } else {
            b = mid;
            zb = z_mid;
        }
    }
    ZeroRecord rec;
    rec.ordinate = 0.5 * (a + b);
    rec.bracket_width = b - a;
    rec.z_left = za;
    rec.z_right = zb;
    return rec;
}

} // namespace

double default_grid_step(double t_hi) {
    return 0.5 * kPi / std::log(std::max(t_hi, 10.0) / kTwoPi);
}

ScanResult scan_zero_ordinates(double t_lo, double t_hi, double grid_step) {
    if (!(0.0 < t_lo && t_lo <= t_hi))
        throw DomainError("scan_zero_ordinates: requires 0 < t_lo <= t_hi");
    const double step_cap = kPi / std::log(std::max(t_hi, 10.0) / kTwoPi);
    if (!(grid_step > 0.0) || grid_step > step_cap * (1.0 + 1e-12))
        throw DomainError("scan_zero_ordinates: grid_step exceeds one mean zero gap");

    ScanResult result;
    const double span = t_hi - t_lo;
    if (span <= 0.0) return result;
    const long n_steps = std::max<long>(1, static_cast<long>(std::ceil(span / grid_step)));

    const EvalAccuracy acc = coarse_acc();
    double prev_t = t_lo;
    double prev_z = hardy_z(prev_t, acc);
    for (long i = 1; i <= n_steps; ++i) {
        const double t = t_lo + span * static_cast<double>(i) / static_cast<double>(n_steps);
        const double z = hardy_z(t, acc);
        if (prev_z == 0.0 || (z < 0.0) != (prev_z < 0.0))
            result.zeros.push_back(refine_zero(prev_t, t, prev_z, z));
        prev_t = t;
        prev_z = z;
    }

    result.estimated_count =
        theta_over_pi_plus_one(t_hi) - theta_over_pi_plus_one(std::max(t_lo, 0.0));
    result.grid_too_coarse =
        result.estimated_count - static_cast<double>(result.zeros.size()) > 1.0;
    return result;
}

double estimate_N(double T) {
    if (!(T >= 2.0)) throw DomainError("estimate_N: requires T >= 2");
    return theta_over_pi_plus_one(T);
}

WindowCount window_zero_count(double T, double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw DomainError("window_zero_count: requires 0 < delta <= 1");
    if (!(T >= 10.0)) throw DomainError("window_zero_count: requires T >= 10");
    WindowCount wc;
    wc.T = T;
    wc.delta = delta;
    const ScanResult scan = scan_zero_ordinates(T, T + delta, default_grid_step(T + delta));
    wc.observed = static_cast<long>(scan.zeros.size());
    wc.predicted = delta * std::log(T / kTwoPi) / kTwoPi;
    wc.predicted_logT = delta * std::log(T) / kTwoPi;
    return wc;
}

std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros) {
    std::string out = "ordinate,bracket_width\n";
    char buf[80];
    for (const auto& z : zeros) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", z.ordinate, z.bracket_width);
        out += buf;
    }
    return out;
}

} // namespace zetalab
