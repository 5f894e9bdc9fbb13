#pragma once

#include <complex>

#include "zetalab/errors.hpp"

namespace zetalab {

using Complex = std::complex<double>;

// Accuracy contract for zeta evaluations.  abs_tol is an absolute error
// target; max_terms caps the length of the truncated Dirichlet sum.
struct EvalAccuracy {
    double abs_tol = 1.0e-10;
    long max_terms = 4'000'000;

    void validate() const {
        if (!(abs_tol > 0.0)) throw DomainError("EvalAccuracy: abs_tol must be > 0");
        if (max_terms < 16) throw DomainError("EvalAccuracy: max_terms must be >= 16");
    }

    // Default tolerance by height: 1e-10 up to t = 1e4, 1e-8 above.
    static EvalAccuracy for_height(double t);
};

// Heights beyond this are rejected: double precision phase error in theta
// would exceed 1e-6.
inline constexpr double kMaxHeight = 1.0e7;

// Riemann zeta function via Euler-Maclaurin summation; reflects through the
// functional equation for Re(s) < 0.  On the critical line, heights >= 1e3
// with abs_tol >= 1e-3 take the Riemann-Siegel main-sum fast path.
Complex eval_zeta(const Complex& s, const EvalAccuracy& acc = {});

// Principal branch of log Gamma(z) for Re(z) > 0 (Stirling series with a
// recurrence shift).  Absolute error <= 1e-12.
Complex log_gamma(const Complex& z);

// Functional-equation factor chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s),
// computed as pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2) so the removable
// sine/Gamma cancellations at even integers need no special casing.
Complex chi_factor(const Complex& s);

// Asymptotic expansion of the Riemann-Siegel theta function,
//   theta(t) = (t/2) log(t/(2 pi)) - t/2 - pi/8 + 1/(48 t) + 7/(5760 t^3)
//              + 31/(80640 t^5) + O(1/t^7).
struct ThetaExpansion {
    static constexpr double kC1 = 1.0 / 48.0;
    static constexpr double kC3 = 7.0 / 5760.0;
    static constexpr double kC5 = 31.0 / 80640.0;

    static double eval(double t);
    // Bound on the truncation error, monotonically decreasing for t >= 10.
    static double remainder_bound(double t);
};

// Continuous branch of theta with theta(0) = 0; odd extension for t < 0.
// Uses ThetaExpansion for |t| >= 10 and the log_gamma definition
// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi below.
double riemann_siegel_theta(double t);

// The log_gamma-based definition at any t; reference path for tests.
double riemann_siegel_theta_reference(double t);

// Hardy Z main value plus the residual imaginary part of
// e^{i theta(t)} zeta(1/2 + it), exposed as a diagnostic.
struct HardyZValue {
    double value = 0.0;
    double im_residual = 0.0;
};

HardyZValue hardy_z_full(double t, const EvalAccuracy& acc = {});
double hardy_z(double t, const EvalAccuracy& acc = {});

// Riemann-Siegel main sum with the first two correction terms; accuracy is
// O((t/2pi)^(-5/4)), better than 1e-4 for t >= 1e3.
double riemann_siegel_z(double t);

} // namespace zetalab
