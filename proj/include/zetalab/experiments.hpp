#pragma once

#include <vector>

#include "zetalab/quadrature.hpp"
#include "zetalab/record.hpp"

namespace zetalab {

// Worker-thread cap for shift-grid evaluations (default: machine
// parallelism).  Results are reduced in grid order regardless.
void set_worker_threads(int n);
int worker_threads();

enum class ShiftSampling { Uniform, PhaseLocked };

// The T ranges over which liminf statements are proxied by a minimum.
struct ShiftGrid {
    double t_min = 10.0;
    double t_max = 100.0;
    double spacing = 1.0;
    ShiftSampling sampling = ShiftSampling::Uniform;

    void validate() const;
    std::vector<double> shifts() const;

    static ShiftGrid uniform(double t_min, double t_max, double spacing);
    // Spacing pi/log(T_max/2pi): resolves one half-cycle of theta.
    static ShiftGrid phase_locked(double t_min, double t_max);
};

// Parameter assignment for the Ramachandra convexity inequality.
struct ConvexityParams {
    double a = 0.5, b = 3.5;     // strip bounds of the rectangle
    double t0 = 0.0;             // center height
    double height = 0.5;         // H: rectangle is |t - t0| <= H
    double window = 0.25;        // D
    double sigma0 = 0.5, sigma1 = 2.0, sigma2 = 3.5;
    double large_constant = 1.0; // A
    double c_constant = 1.0;     // C
    long r = 1;
    double max_modulus = 2.0;    // M, an assumed upper bound on |zeta| over R

    void validate() const;
};

// Lemma-1 proof parameter assignment: sigma0 = sigma, sigma1 = 2,
// sigma2 = 4 - sigma, D = min(delta/4, 2/3), C = 2 delta / e,
// r = ceil((A+3) log M - (log delta)/2).
ConvexityParams lemma1_parameters(double sigma, double delta, double M, double A);

// Integral over [A, B] of |sin(theta(t + T) + C)|; reference 2(B-A)/pi.
ExperimentRecord sine_phase_average(double A, double B, double C, double T,
                                    const QuadratureConfig& cfg);

// Sweep over several T values, fitting the deviation model c / log T.
ExperimentRecord sine_phase_sweep(const std::vector<double>& Ts, double A, double B, double C,
                                  const QuadratureConfig& cfg);

// Lower bound for the L1 translate distance:
//   integral of |f(t)| |sin(theta(t + T) - eta(t))| over [0, H],
// with the integrand set to 0 where |f| <= 1e-14.
double phase_lower_bound(const TargetFunction& f, const LineSegment& seg,
                         const QuadratureConfig& cfg);

// Minimum of the L1 translate distance over a shift grid against the
// 2/pi * integral |f| bound, with the phase lower bound checked at every
// shift.
ExperimentRecord nonuniversality_bound_run(const TargetFunction& f, const WeightFunction& G,
                                           const LineSegment& seg_template, const ShiftGrid& grid,
                                           const QuadratureConfig& cfg, double slack = 0.15);

// Both sides of the convexity inequality for f = zeta, plus the simplified
// Lemma-1 form and its anchor bounds when the parameters have the Lemma-1
// shape.
ExperimentRecord convexity_check(const ConvexityParams& params, const QuadratureConfig& cfg);

// Log-log slope of the short-interval mean versus the reference 1/2 - sigma,
// plus L1 distances to f = 1 at each height (the divergence exhibit).
ExperimentRecord growth_exponent_fit(double sigma, double delta,
                                     const std::vector<double>& T_points,
                                     const QuadratureConfig& cfg);

enum class DistanceNorm { L1, Sup };

// Best shift and distance distribution over a grid.
ExperimentRecord translate_search(const TargetFunction& f, const LineSegment& seg_template,
                                  const ShiftGrid& grid, DistanceNorm norm,
                                  const QuadratureConfig& cfg);

// Fraction of shifts T <= T_max whose sup distance to f falls below the
// threshold (eps, or eps * T^{1/2 - sigma} when scaled_threshold is set).
ExperimentRecord density_measure(const TargetFunction& f, const LineSegment& seg_template,
                                 double eps, double T_max, double sample_step,
                                 const QuadratureConfig& cfg, bool scaled_threshold = false);

enum class ZSearchMode { Z, AbsZ, LogLogNormalizedAbs };

// Exploratory searches on the critical line; always informational.
ExperimentRecord z_universality_search(const TargetFunction& f, double H, const ShiftGrid& grid,
                                       ZSearchMode mode, const QuadratureConfig& cfg);

} // namespace zetalab
