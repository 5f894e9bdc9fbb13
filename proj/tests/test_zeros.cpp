#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zetalab/zeros.hpp"

using namespace zetalab;

namespace {
// Independent bisection oracle on Z for a known bracket.
double bisect_z(double lo, double hi) {
    const EvalAccuracy acc = EvalAccuracy::for_height(hi);
    double f_lo = hardy_z(lo, acc);
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = hardy_z(mid, acc);
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}
} // namespace

TEST_CASE("first zeros match the bisection oracle") {
    const ScanResult scan = scan_zero_ordinates(0.001, 33.0, 0.3);
    REQUIRE(scan.zeros.size() == 5);
    CHECK(scan.zeros[0].ordinate == doctest::Approx(bisect_z(14.0, 14.5)).epsilon(1e-9));
    CHECK(scan.zeros[0].ordinate == doctest::Approx(14.1347251417).epsilon(1e-9));
    CHECK(scan.zeros[1].ordinate == doctest::Approx(21.0220396388).epsilon(1e-8));
    CHECK(scan.zeros[2].ordinate == doctest::Approx(25.0108575801).epsilon(1e-8));
    CHECK(scan.zeros[3].ordinate == doctest::Approx(30.4248761259).epsilon(1e-8));
    CHECK(scan.zeros[4].ordinate == doctest::Approx(32.9350615877).epsilon(1e-8));
    CHECK_FALSE(scan.grid_too_coarse);
}

TEST_CASE("zero records satisfy their invariants") {
    const ScanResult scan = scan_zero_ordinates(10.0, 60.0, 0.25);
    CHECK(scan.zeros.size() == 13);
    for (const auto& z : scan.zeros) {
        CHECK(z.bracket_width <= 1e-9 * std::max(1.0, z.ordinate));
        CHECK(std::abs(hardy_z(z.ordinate, EvalAccuracy::for_height(z.ordinate))) <= 1e-6);
        CHECK((z.z_left < 0.0) != (z.z_right < 0.0));
    }
    // Ordinates strictly increasing.
    for (size_t i = 1; i < scan.zeros.size(); ++i)
        CHECK(scan.zeros[i].ordinate > scan.zeros[i - 1].ordinate);
}

TEST_CASE("scan argument validation") {
    CHECK_THROWS_AS(scan_zero_ordinates(-1.0, 10.0, 0.1), DomainError);
    CHECK_THROWS_AS(scan_zero_ordinates(10.0, 5.0, 0.1), DomainError);
    // Step above the resolvable gap is rejected.
    CHECK_THROWS_AS(scan_zero_ordinates(10.0, 1000.0, 5.0), DomainError);
}

TEST_CASE("riemann-von mangoldt estimate") {
    CHECK(estimate_N(100.0) == doctest::Approx(riemann_siegel_theta(100.0) / std::numbers::pi + 1.0));
    // Known counts: N(100) = 29.
    CHECK(std::abs(estimate_N(100.0) - 29.0) < 2.0);
    CHECK(default_grid_step(100.0) ==
          doctest::Approx(0.5 * std::numbers::pi / std::log(100.0 / (2.0 * std::numbers::pi))));
}

TEST_CASE("window counts near their prediction") {
    const WindowCount w = window_zero_count(1000.0, 1.0);
    CHECK(w.predicted ==
          doctest::Approx(std::log(1000.0 / (2.0 * std::numbers::pi)) /
                          (2.0 * std::numbers::pi)));
    CHECK(w.predicted_logT > w.predicted); // log T dominates log(T/2pi)
    CHECK(w.observed >= 0);
    CHECK(w.observed <= 3);
    CHECK_THROWS_AS(window_zero_count(1000.0, 10.0), DomainError);
    CHECK_THROWS_AS(window_zero_count(5.0, 1.0), DomainError);
}

TEST_CASE("csv export format") {
    ScanResult scan = scan_zero_ordinates(14.0, 15.0, 0.2);
    REQUIRE(scan.zeros.size() == 1);
    const std::string csv = zeros_to_csv(scan.zeros);
    CHECK(csv.rfind("ordinate,bracket_width\n", 0) == 0);
    CHECK(csv.find("14.13472514") != std::string::npos);
    // 12 significant digits per value: "14." plus 10 total digits after it.
    CHECK(csv.find(',') != std::string::npos);
}
