#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zetalab/experiments.hpp"

using namespace zetalab;

namespace {
constexpr double kPi = std::numbers::pi;

QuadratureConfig cfg_for(double length, double height, double tol) {
    return QuadratureConfig::for_segment(length, height, tol);
}
} // namespace

TEST_CASE("shift grids") {
    const ShiftGrid u = ShiftGrid::uniform(10.0, 12.0, 0.5);
    const auto us = u.shifts();
    REQUIRE(us.size() == 5);
    CHECK(us.front() == 10.0);
    CHECK(us.back() == 12.0);

    const ShiftGrid p = ShiftGrid::phase_locked(1e3, 1e4);
    CHECK(p.spacing <= kPi / std::log(1e4 / (2.0 * kPi)) + 1e-12);
    CHECK(p.shifts().size() >= 2000);

    ShiftGrid bad = p;
    bad.spacing = 1.0; // coarser than a theta half-cycle
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(ShiftGrid::uniform(10.0, 5.0, 0.5), DomainError);
}

TEST_CASE("lemma-shaped convexity parameters") {
    const ConvexityParams p = lemma1_parameters(0.75, 1.0, 100.0, 2.0);
    CHECK(p.sigma0 == 0.75);
    CHECK(p.sigma1 == 2.0);
    CHECK(p.sigma2 == doctest::Approx(3.25));
    CHECK(p.window == doctest::Approx(0.25));
    CHECK(p.height == doctest::Approx(0.5));
    CHECK(p.c_constant == doctest::Approx(2.0 / std::numbers::e));
    CHECK(p.r >= 1);
    // D caps at 2/3 for large delta.
    CHECK(lemma1_parameters(0.75, 10.0, 100.0, 2.0).window == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(lemma1_parameters(1.5, 1.0, 100.0, 2.0), DomainError);
}

TEST_CASE("sine phase average approaches 2/pi") {
    const ExperimentRecord rec =
        sine_phase_average(0.0, 1.0, 0.0, 1e5, cfg_for(1.0, 1e5, 1e-8));
    CHECK(rec.computed.at("value") ==
          doctest::Approx(2.0 / kPi).epsilon(4.0 / std::log(1e5) / (2.0 / kPi)));
    CHECK(rec.verdict == Verdict::Pass);
    CHECK(rec.reference.at("limit") == doctest::Approx(2.0 / kPi));
}

TEST_CASE("sine phase sweep fits c / log T") {
    const std::vector<double> Ts = {1e3, 1e4, 1e5};
    const ExperimentRecord rec = sine_phase_sweep(Ts, 0.0, 1.0, 1.0, cfg_for(1.0, 1e5, 1e-8));
    CHECK(rec.verdict == Verdict::Pass);
    CHECK(rec.computed.at("c_fit") <= 5.0);
}

TEST_CASE("phase lower bound reduces to the sine average for f = 1") {
    const TargetFunction f = TargetFunction::constant(1.0, 1.0);
    const LineSegment seg{0.5, 1e4, 1.0};
    const double plb = phase_lower_bound(f, seg, cfg_for(1.0, 1e4, 1e-6));
    CHECK(plb == doctest::Approx(2.0 / kPi).epsilon(0.25));
    CHECK(plb >= 0.55);
    LineSegment off = seg;
    off.sigma = 0.75;
    CHECK_THROWS_AS(phase_lower_bound(f, off, cfg_for(1.0, 1e4, 1e-6)), DomainError);
}

TEST_CASE("bound run on a small grid") {
    const TargetFunction f = TargetFunction::constant(1.0, 1.0);
    const ShiftGrid grid = ShiftGrid::uniform(1e3, 1.1e3, 0.426);
    const LineSegment seg{0.5, grid.t_min, 1.0};
    QuadratureConfig cfg = cfg_for(1.0, grid.t_max, 1e-3);
    cfg.zeta_acc.abs_tol = 1e-3;
    const ExperimentRecord rec =
        nonuniversality_bound_run(f, WeightFunction::unit(), seg, grid, cfg);
    CHECK(rec.verdict == Verdict::Pass);
    CHECK(rec.computed.at("min_distance") >= 0.85 * 2.0 / kPi);
    CHECK(rec.computed.at("chain_violations") == 0.0);
    CHECK(rec.computed.at("min_distance") >=
          rec.computed.at("phase_lower_bound_at_argmin") - 2.0 * cfg.abs_tol);
}

TEST_CASE("bound run flags the identity case as informational") {
    const double T0 = 1500.0;
    const TargetFunction f = TargetFunction::zeta_translate(0.5, T0, 1.0);
    const ShiftGrid grid = ShiftGrid::uniform(T0 - 1.0, T0 + 1.0, 0.25);
    const LineSegment seg{0.5, grid.t_min, 1.0};
    QuadratureConfig cfg = cfg_for(1.0, grid.t_max, 1e-3);
    cfg.zeta_acc.abs_tol = 1e-3;
    const ExperimentRecord rec =
        nonuniversality_bound_run(f, WeightFunction::unit(), seg, grid, cfg);
    CHECK(rec.verdict == Verdict::Informational);
    CHECK(rec.computed.at("identity_case") == 1.0);
    CHECK(rec.computed.at("min_distance") <= 1e-6);
}

TEST_CASE("convexity inequality and anchors at a lemma-shaped point") {
    ConvexityParams params = lemma1_parameters(0.6, 1.0, 100.0, 1.0);
    params.t0 = 1e3;
    const ExperimentRecord rec = convexity_check(params, cfg_for(params.height, 1e3, 1e-8));
    CHECK(rec.verdict == Verdict::Pass);
    CHECK(rec.computed.at("lhs") <= rec.computed.at("rhs"));
    CHECK(rec.computed.at("anchors_ok") == 1.0);
    CHECK(rec.computed.at("anchor_J_lower") <= rec.computed.at("lhs"));
}

TEST_CASE("convexity rejects a rectangle containing the pole") {
    ConvexityParams params = lemma1_parameters(0.6, 1.0, 100.0, 1.0);
    params.t0 = 0.1;
    CHECK_THROWS_AS(convexity_check(params, cfg_for(params.height, 1.0, 1e-8)), DomainError);
}

TEST_CASE("growth exponent at sigma = 1/4") {
    // delta wide enough to average the unit-window fluctuations out.
    const std::vector<double> Ts = {1e2, 1e3, 1e4};
    const double delta = 50.0;
    const ExperimentRecord rec =
        growth_exponent_fit(0.25, delta, Ts, cfg_for(delta, 1e4, 1e-4));
    CHECK(std::abs(rec.computed.at("slope") - 0.25) <= 0.1);
    CHECK(rec.verdict == Verdict::Pass);
    CHECK(rec.computed.at("distances_monotone") == 1.0);
    CHECK_THROWS_AS(growth_exponent_fit(0.75, 1.0, Ts, cfg_for(1.0, 1e4, 1e-6)), DomainError);
    CHECK_THROWS_AS(growth_exponent_fit(0.25, 1.0, {1e2, 1e3}, cfg_for(1.0, 1e4, 1e-6)),
                    DomainError);
}

TEST_CASE("translate search reports quantiles") {
    const TargetFunction f = TargetFunction::constant(1.0, 1.0);
    const ShiftGrid grid = ShiftGrid::uniform(100.0, 110.0, 0.5);
    const LineSegment seg{0.75, grid.t_min, 1.0};
    const ExperimentRecord rec =
        translate_search(f, seg, grid, DistanceNorm::L1, cfg_for(1.0, grid.t_max, 1e-6));
    CHECK(rec.verdict == Verdict::Informational);
    CHECK(rec.computed.at("distance_min") <= rec.computed.at("distance_median"));
    CHECK(rec.computed.at("distance_median") <= rec.computed.at("distance_max"));
    CHECK(rec.computed.at("best_distance") == rec.computed.at("distance_min"));
    CHECK(rec.computed.at("best_T") >= 100.0);
    CHECK(rec.computed.at("best_T") <= 110.0);
}

TEST_CASE("density measure counts near approximations") {
    const TargetFunction f = TargetFunction::constant(1.0, 1.0);
    const LineSegment seg{0.25, 1.0, 1.0};
    const ExperimentRecord rec =
        density_measure(f, seg, 0.5, 200.0, 1.0, cfg_for(1.0, 200.0, 1e-6), false);
    CHECK(rec.verdict == Verdict::Informational);
    CHECK(rec.computed.at("fraction") >= 0.0);
    CHECK(rec.computed.at("fraction") <= 1.0);
    CHECK(rec.computed.at("num_samples") == 200.0);
    CHECK_THROWS_AS(density_measure(f, LineSegment{0.75, 1.0, 1.0}, 0.5, 200.0, 1.0,
                                    cfg_for(1.0, 200.0, 1e-6), false),
                    DomainError);
}

TEST_CASE("z universality search modes and preconditions") {
    const ShiftGrid grid = ShiftGrid::uniform(1e3, 1.02e3, 0.426);
    QuadratureConfig cfg = cfg_for(1.0, grid.t_max, 1e-3);
    cfg.zeta_acc.abs_tol = 1e-3;
    const TargetFunction real_f = TargetFunction::constant(1.0, 1.0);
    const ExperimentRecord rec = z_universality_search(real_f, 1.0, grid, ZSearchMode::Z, cfg);
    CHECK(rec.verdict == Verdict::Informational);
    CHECK(rec.computed.at("distance_min") >= 0.0);

    const TargetFunction complex_f =
        TargetFunction::polynomial({Complex(1.0, 0.0), Complex(0.0, 1.0)}, 1.0);
    CHECK_THROWS_AS(z_universality_search(complex_f, 1.0, grid, ZSearchMode::Z, cfg),
                    DomainError);
    const TargetFunction neg_f = TargetFunction::constant(-1.0, 1.0);
    CHECK_THROWS_AS(z_universality_search(neg_f, 1.0, grid, ZSearchMode::AbsZ, cfg),
                    DomainError);
    // Log-log normalization needs T >= e^2.
    const ShiftGrid low = ShiftGrid::uniform(2.0, 4.0, 0.5);
    CHECK_THROWS_AS(
        z_universality_search(real_f, 1.0, low, ZSearchMode::LogLogNormalizedAbs, cfg),
        DomainError);
}

TEST_CASE("records are deterministic and keep runtime out of the payload") {
    const ExperimentRecord a = sine_phase_average(0.0, 1.0, 0.0, 1e4, cfg_for(1.0, 1e4, 1e-8));
    const ExperimentRecord b = sine_phase_average(0.0, 1.0, 0.0, 1e4, cfg_for(1.0, 1e4, 1e-8));
    CHECK(a.payload_json() == b.payload_json());
    CHECK(a.payload_json().find("runtime") == std::string::npos);
    CHECK(a.to_json().find("runtime_seconds") != std::string::npos);
    CHECK(a.runtime_seconds > 0.0);
    CHECK(a.to_csv().find("computed.value") != std::string::npos);
}
