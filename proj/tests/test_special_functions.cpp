#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zetalab/special_functions.hpp"

using namespace zetalab;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent log Gamma oracle: shift 200 steps right, apply Stirling's
// leading terms there, subtract the accumulated logs.
Complex log_gamma_oracle(Complex z) {
    Complex shift(0.0, 0.0);
    for (int i = 0; i < 200; ++i) {
        shift += std::log(z);
        z += 1.0;
    }
    Complex r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    r += 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z * z);
    return r - shift;
}
} // namespace

TEST_CASE("zeta at classical real points") {
    EvalAccuracy acc;
    CHECK(eval_zeta(Complex(2.0, 0.0), acc).real() ==
          doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
    CHECK(eval_zeta(Complex(4.0, 0.0), acc).real() ==
          doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-12));
    CHECK(eval_zeta(Complex(0.0, 0.0), acc).real() == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(eval_zeta(Complex(-1.0, 0.0), acc).real() ==
          doctest::Approx(-1.0 / 12.0).epsilon(1e-9));
    CHECK(eval_zeta(Complex(0.5, 0.0), acc).real() ==
          doctest::Approx(-1.4603545088095868).epsilon(1e-11));
    CHECK(eval_zeta(Complex(2.0, 0.0), acc).imag() == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("zeta conjugate symmetry") {
    EvalAccuracy acc;
    for (double sigma : {0.25, 0.5, 2.0}) {
        for (double t : {3.7, 55.0, 300.0}) {
            const Complex up = eval_zeta(Complex(sigma, t), acc);
            const Complex dn = eval_zeta(Complex(sigma, -t), acc);
            CHECK(up == std::conj(dn)); // exact, by construction
        }
    }
}

TEST_CASE("zeta pole and domain errors") {
    EvalAccuracy acc;
    CHECK_THROWS_AS(eval_zeta(Complex(1.0, 0.0), acc), PoleError);
    CHECK_THROWS_AS(eval_zeta(Complex(0.5, 2e7), acc), DomainError);
    EvalAccuracy bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(eval_zeta(Complex(2.0, 0.0), bad), DomainError);
    EvalAccuracy tiny;
    tiny.max_terms = 16;
    tiny.abs_tol = 1e-12;
    CHECK_THROWS_AS(eval_zeta(Complex(0.5, 5000.0), tiny), AccuracyError);
}

TEST_CASE("zeta near the pole stays finite and large") {
    EvalAccuracy acc;
    const Complex v = eval_zeta(Complex(1.0 + 1e-6, 0.0), acc);
    CHECK(v.real() > 9.9e5); // ~ 1/(s-1)
    CHECK(std::isfinite(v.real()));
}

TEST_CASE("log_gamma against the shift-and-Stirling oracle") {
    for (const Complex z : {Complex(0.25, 7.0), Complex(1.0, 0.0), Complex(0.5, 0.0),
                            Complex(3.25, -40.0), Complex(12.0, 500.0), Complex(0.1, 0.05)}) {
        const Complex got = log_gamma(z);
        const Complex want = log_gamma_oracle(z);
        CHECK(std::abs(got - want) < 1e-11);
    }
    // Known closed forms.
    CHECK(log_gamma(Complex(1.0, 0.0)).real() == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(log_gamma(Complex(0.5, 0.0)).real() ==
          doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-13));
    CHECK(log_gamma(Complex(5.0, 0.0)).real() ==
          doctest::Approx(std::log(24.0)).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma(Complex(-1.5, 0.0)), DomainError);
    CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), DomainError);
}

TEST_CASE("chi relates zeta across the functional equation") {
    EvalAccuracy acc;
    // chi(2) zeta(-1) = zeta(2)
    const Complex lhs = chi_factor(Complex(2.0, 0.0)) * Complex(-1.0 / 12.0, 0.0);
    CHECK(lhs.real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-9));
    // |chi| = 1 on the critical line.
    for (double t : {5.0, 30.0, 700.0})
        CHECK(std::abs(chi_factor(Complex(0.5, t))) == doctest::Approx(1.0).epsilon(1e-12));
    // chi(s) chi(1-s) = 1.
    const Complex s(0.3, 12.0);
    CHECK(std::abs(chi_factor(s) * chi_factor(1.0 - s) - 1.0) < 1e-10);
    (void)acc;
}

TEST_CASE("theta asymptotics agree with the log_gamma definition") {
    for (double t : {10.0, 14.0, 50.0, 1000.0, 99999.0}) {
        CHECK(std::abs(riemann_siegel_theta(t) - riemann_siegel_theta_reference(t)) < 1e-10);
        CHECK(ThetaExpansion::remainder_bound(t) < 1e-10);
    }
    // Odd extension and continuity at the switchover.
    CHECK(riemann_siegel_theta(-25.0) == -riemann_siegel_theta(25.0));
    CHECK(std::abs(riemann_siegel_theta(10.0 - 1e-9) - riemann_siegel_theta(10.0 + 1e-9)) <
          1e-7);
    CHECK(riemann_siegel_theta(0.0) == 0.0);
    CHECK_THROWS_AS(riemann_siegel_theta(2e7), DomainError);
}

TEST_CASE("theta has its positive root near 17.8456") {
    // Bisection oracle on [17, 18].
    double lo = 17.0, hi = 18.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (riemann_siegel_theta(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    CHECK(0.5 * (lo + hi) == doctest::Approx(17.845599540).epsilon(1e-9));
}

TEST_CASE("hardy Z is real and matches |zeta| on the line") {
    for (double t : {5.0, 14.0, 100.0, 500.0}) {
        const HardyZValue z = hardy_z_full(t, EvalAccuracy::for_height(t));
        CHECK(std::abs(z.im_residual) < 1e-10);
        CHECK(std::abs(std::abs(z.value) - std::abs(eval_zeta(Complex(0.5, t)))) < 1e-9);
    }
    CHECK(hardy_z(14.134725141734694) == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("riemann_siegel_z tracks the exact Z at large height") {
    for (double t : {1000.0, 5000.5, 20000.25}) {
        const double exact = hardy_z(t, EvalAccuracy::for_height(t));
        CHECK(std::abs(riemann_siegel_z(t) - exact) < 1e-4);
    }
}

TEST_CASE("fast path engages only under its gate") {
    EvalAccuracy coarse;
    coarse.abs_tol = 1e-3;
    const Complex fast = eval_zeta(Complex(0.5, 2000.0), coarse);
    const Complex exact = eval_zeta(Complex(0.5, 2000.0), EvalAccuracy::for_height(2000.0));
    CHECK(std::abs(fast - exact) < 1e-2);
    // Off the line the coarse tolerance still goes through Euler-Maclaurin,
    // which honors the requested absolute tolerance.
    const Complex off = eval_zeta(Complex(0.6, 2000.0), coarse);
    const Complex off_exact = eval_zeta(Complex(0.6, 2000.0), EvalAccuracy::for_height(2000.0));
    CHECK(std::abs(off - off_exact) < 1e-3);
}

TEST_CASE("accuracy defaults by height") {
    CHECK(EvalAccuracy::for_height(100.0).abs_tol == 1e-10);
    CHECK(EvalAccuracy::for_height(2e4).abs_tol == 1e-8);
}
