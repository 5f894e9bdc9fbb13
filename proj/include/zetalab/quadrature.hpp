#pragma once

#include <functional>

#include "zetalab/targets.hpp"

namespace zetalab {

enum class QuadRule { CompositeSimpson, GaussKronrod715 };

struct QuadratureConfig {
    int base_panels = 8;
    int max_depth = 16;
    double abs_tol = 1.0e-10;
    QuadRule rule = QuadRule::GaussKronrod715;
    EvalAccuracy zeta_acc{};

    void validate() const {
        if (!(abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be > 0");
        if (base_panels < 4) throw DomainError("QuadratureConfig: base_panels must be >= 4");
        if (max_depth < 1) throw DomainError("QuadratureConfig: max_depth must be >= 1");
    }

    // Panel density tracks the oscillation rate theta'(t) ~ (1/2) log(T/2pi):
    // base_panels = ceil(8 * length * log(2 + T)).
    static QuadratureConfig for_segment(double length, double t_start, double abs_tol = 1.0e-10);
};

// A vertical-line window (sigma, T, H).
struct LineSegment {
    double sigma = 0.5;
    double t_start = 0.0;
    double length = 1.0;

    void validate() const {
        if (!(length > 0.0)) throw DomainError("LineSegment: length must be > 0");
        if (sigma == 1.0 && t_start < 2.0)
            throw DomainError("LineSegment: sigma = 1 requires t_start >= 2 (pole at s = 1)");
    }
};

struct IntegralResult {
    double value = 0.0;
    double abs_error = 0.0;
    bool tolerance_met = true;
};

using Curve = std::function<Complex(double)>;

// Adaptive integral of |curve(t)| over [a, b].  Panels split where the
// two-level estimate disagrees and at detected near-zeros of the curve
// (|curve| has kinks there).  When max_depth is exhausted the best estimate
// is returned with tolerance_met = false.
IntegralResult integrate_abs(const Curve& curve, double a, double b, const QuadratureConfig& cfg);

// L1 distance between a target and a weighted zeta translate:
//   integral over [0, H] of |f(t) - G(T + t) zeta(sigma + i(T + t))| dt.
IntegralResult l1_translate_distance(const TargetFunction& f, const LineSegment& seg,
                                     const WeightFunction& G, const QuadratureConfig& cfg);

// Sup-norm variant: max over a fixed grid of 4*base_panels + 1 points.
double sup_translate_distance(const TargetFunction& f, const LineSegment& seg,
                              const WeightFunction& G, const QuadratureConfig& cfg);

// Short-interval mean: integral over [T, T + delta] of |zeta(sigma + it)| dt.
IntegralResult short_interval_mean(const LineSegment& seg, const QuadratureConfig& cfg);

} // namespace zetalab
