#pragma once

#include <string>
#include <vector>

#include "zetalab/special_functions.hpp"

namespace zetalab {

// Monotone-preserving piecewise-cubic interpolant (Fritsch-Carlson slopes,
// clamped three-point endpoint derivatives), applied per component.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> xs, std::vector<double> ys);
    double operator()(double x) const; // clamps outside [xs.front(), xs.back()]
    double x_min() const { return xs_.front(); }
    double x_max() const { return xs_.back(); }

private:
    std::vector<double> xs_, ys_, slopes_;
};

// The target f of the translate-distance experiments: a complex-valued
// function on [0, H].
class TargetFunction {
public:
    enum class Kind { Constant, Polynomial, ZetaTranslate, AbsZetaTranslate, Sampled };

    static TargetFunction constant(Complex c, double domain_length);
    static TargetFunction polynomial(std::vector<Complex> coeffs, double domain_length);
    static TargetFunction zeta_translate(double sigma, double t0, double domain_length);
    static TargetFunction abs_zeta_translate(double t0, double domain_length);
    static TargetFunction sampled(std::vector<double> ts, std::vector<Complex> values);

    // Builtin grammar "const:<c>", "poly:<c0,c1,...>", "zeta:<sigma>,<T0>",
    // "abszeta:<T0>", otherwise a CSV file path with rows "t,re,im".
    // domain_length <= 0 means "take the extent from the file" (builtin
    // kinds then reject).
    static TargetFunction parse(const std::string& spec, double domain_length);

    Kind kind() const { return kind_; }
    double domain_length() const { return domain_length_; }
    Complex eval(double t, const EvalAccuracy& acc = {}) const;
    // arg f(t); 0 where |f(t)| <= 1e-14.
    double phase(double t, const EvalAccuracy& acc = {}) const;
    bool is_real_valued() const { return real_valued_; }
    // true iff f is real and >= -1e-12 on its grid.
    bool is_nonnegative() const { return nonnegative_; }
    std::string description() const { return description_; }

private:
    TargetFunction() = default;
    void classify();

    Kind kind_ = Kind::Constant;
    double domain_length_ = 1.0;
    Complex constant_{1.0, 0.0};
    std::vector<Complex> coeffs_;
    double sigma_ = 0.5;
    double t0_ = 0.0;
    PchipInterpolant re_, im_;
    bool real_valued_ = false;
    bool nonnegative_ = false;
    std::string description_;
};

// The weight G multiplying the zeta translate.  Sampled weights are defined
// on their grid span in absolute t and clamp outside it.
class WeightFunction {
public:
    enum class Kind { Unit, SampledReal, SampledComplex };

    static WeightFunction unit();
    static WeightFunction sampled(std::vector<double> ts, std::vector<Complex> values);
    static WeightFunction parse(const std::string& spec); // "unit" or CSV path

    Kind kind() const { return kind_; }
    Complex eval(double t_abs) const;
    std::string description() const { return description_; }

private:
    WeightFunction() = default;
    Kind kind_ = Kind::Unit;
    PchipInterpolant re_, im_;
    std::string description_ = "unit";
};

// Shared CSV loader for "t,re,im" sample files (optional header row).
void load_samples_csv(const std::string& path, std::vector<double>& ts,
                      std::vector<Complex>& values);

} // namespace zetalab
