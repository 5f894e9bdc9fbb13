#include "zetalab/targets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace zetalab {

namespace {

double parse_real(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": cannot parse number '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

} // namespace

PchipInterpolant::PchipInterpolant(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const size_t n = xs_.size();
    if (n < 2 || ys_.size() != n)
        throw DomainError("PchipInterpolant: need at least two samples");
    for (size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw DomainError("PchipInterpolant: sample grid must be strictly increasing");

    std::vector<double> h(n - 1), d(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = xs_[i + 1] - xs_[i];
        d[i] = (ys_[i + 1] - ys_[i]) / h[i];
    }
    slopes_.assign(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            slopes_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    // Shape-preserving three-point endpoint slopes.
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (m * d0 <= 0.0)
            m = 0.0;
        else if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0))
            m = 3.0 * d0;
        return m;
    };
    if (n == 2) {
        slopes_[0] = slopes_[1] = d[0];
    } else {
        slopes_[0] = end_slope(h[0], h[1], d[0], d[1]);
        slopes_[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    }
}

double PchipInterpolant::operator()(double x) const {
    if (xs_.empty()) return 0.0;
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const size_t i = static_cast<size_t>(it - xs_.begin()) - 1;
    const double h = xs_[i + 1] - xs_[i];
    const double u = (x - xs_[i]) / h;
    const double u2 = u * u, u3 = u2 * u;
    const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    const double h10 = u3 - 2.0 * u2 + u;
    const double h01 = -2.0 * u3 + 3.0 * u2;
    const double h11 = u3 - u2;
    return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] + h11 * h * slopes_[i + 1];
}

TargetFunction TargetFunction::constant(Complex c, double domain_length) {
    TargetFunction f;
    f.kind_ = Kind::Constant;
    f.constant_ = c;
    f.domain_length_ = domain_length;
    f.description_ = "const";
    f.classify();
    return f;
}

TargetFunction TargetFunction::polynomial(std::vector<Complex> coeffs, double domain_length) {
    if (coeffs.empty()) throw DomainError("TargetFunction: polynomial needs coefficients");
    TargetFunction f;
    f.kind_ = Kind::Polynomial;
    f.coeffs_ = std::move(coeffs);
    f.domain_length_ = domain_length;
    f.description_ = "poly";
    f.classify();
    return f;
}

TargetFunction TargetFunction::zeta_translate(double sigma, double t0, double domain_length) {
    TargetFunction f;
    f.kind_ = Kind::ZetaTranslate;
    f.sigma_ = sigma;
    f.t0_ = t0;
    f.domain_length_ = domain_length;
    f.description_ = "zeta-translate";
    f.classify();
    return f;
}

TargetFunction TargetFunction::abs_zeta_translate(double t0, double domain_length) {
    TargetFunction f;
    f.kind_ = Kind::AbsZetaTranslate;
    f.sigma_ = 0.5;
    f.t0_ = t0;
    f.domain_length_ = domain_length;
    f.description_ = "abs-zeta-translate";
    f.classify();
    return f;
}

TargetFunction TargetFunction::sampled(std::vector<double> ts, std::vector<Complex> values) {
    if (ts.size() != values.size() || ts.size() < 2)
        throw DomainError("TargetFunction: sampled target needs matching t/value arrays");
    if (std::abs(ts.front()) > 1e-9)
        throw DomainError("TargetFunction: sampled grid must start at t = 0");
    TargetFunction f;
    f.kind_ = Kind::Sampled;
    f.domain_length_ = ts.back();
    std::vector<double> re(ts.size()), im(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
        re[i] = values[i].real();
        im[i] = values[i].imag();
    }
    f.re_ = PchipInterpolant(ts, re);
    f.im_ = PchipInterpolant(std::move(ts), im);
    double max_im = 0.0, min_re = 0.0;
    for (size_t i = 0; i < re.size(); ++i) {
        max_im = std::max(max_im, std::abs(im[i]));
        min_re = std::min(min_re, re[i]);
    }
    f.real_valued_ = max_im <= 1e-12;
    f.nonnegative_ = f.real_valued_ && min_re >= -1e-12;
    f.description_ = "sampled";
    return f;
}

void TargetFunction::classify() {
    switch (kind_) {
        case Kind::Constant:
            real_valued_ = std::abs(constant_.imag()) <= 1e-12;
            nonnegative_ = real_valued_ && constant_.real() >= -1e-12;
            break;
        case Kind::Polynomial: {
            double max_im = 0.0;
            for (const auto& c : coeffs_) max_im = std::max(max_im, std::abs(c.imag()));
            real_valued_ = max_im <= 1e-12;
            if (real_valued_) {
                double min_v = 0.0;
                for (int i = 0; i <= 256; ++i) {
                    const double t = domain_length_ * i / 256.0;
                    min_v = std::min(min_v, eval(t).real());
                }
                nonnegative_ = min_v >= -1e-12;
            }
            break;
        }
        case Kind::ZetaTranslate:
            real_valued_ = false;
            nonnegative_ = false;
            break;
        case Kind::AbsZetaTranslate:
            real_valued_ = true;
            nonnegative_ = true;
            break;
        case Kind::Sampled:
            break;
    }
}

Complex TargetFunction::eval(double t, const EvalAccuracy& acc) const {
    switch (kind_) {
        case Kind::Constant:
            return constant_;
        case Kind::Polynomial: {
            Complex v(0.0, 0.0);
            for (size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
            return v;
        }
        case Kind::ZetaTranslate:
            return eval_zeta(Complex(sigma_, t0_ + t), acc);
        case Kind::AbsZetaTranslate:
            return Complex(std::abs(eval_zeta(Complex(0.5, t0_ + t), acc)), 0.0);
        case Kind::Sampled:
            return Complex(re_(t), im_(t));
    }
    return {};
}

double TargetFunction::phase(double t, const EvalAccuracy& acc) const {
    const Complex v = eval(t, acc);
    if (std::abs(v) <= 1e-14) return 0.0;
    return std::arg(v);
}

TargetFunction TargetFunction::parse(const std::string& spec, double domain_length) {
    const auto colon = spec.find(':');
    const std::string head = (colon == std::string::npos) ? "" : spec.substr(0, colon);
    const std::string tail = (colon == std::string::npos) ? "" : spec.substr(colon + 1);
    const bool builtin =
        head == "const" || head == "poly" || head == "zeta" || head == "abszeta";
    if (builtin && domain_length <= 0.0)
        throw UsageError("target '" + spec + "' requires an explicit --H > 0");

    if (head == "const") {
        const auto parts = split(tail, ',');
        if (parts.empty() || parts.size() > 2) throw UsageError("bad const target: " + spec);
        const double re = parse_real(parts[0], "target");
        const double im = parts.size() == 2 ? parse_real(parts[1], "target") : 0.0;
        auto f = constant(Complex(re, im), domain_length);
        f.description_ = spec;
        return f;
    }
    if (head == "poly") {
        std::vector<Complex> coeffs;
        for (const auto& p : split(tail, ','))
            coeffs.emplace_back(parse_real(p, "target"), 0.0);
        auto f = polynomial(std::move(coeffs), domain_length);
        f.description_ = spec;
        return f;
    }
    if (head == "zeta") {
        const auto parts = split(tail, ',');
        if (parts.size() != 2) throw UsageError("bad zeta target (want zeta:<sigma>,<T0>): " + spec);
        auto f = zeta_translate(parse_real(parts[0], "target"), parse_real(parts[1], "target"),
                                domain_length);
        f.description_ = spec;
        return f;
    }
    if (head == "abszeta") {
        auto f = abs_zeta_translate(parse_real(tail, "target"), domain_length);
        f.description_ = spec;
        return f;
    }

    // Otherwise a CSV sample file.
    std::vector<double> ts;
    std::vector<Complex> values;
    load_samples_csv(spec, ts, values);
    if (std::abs(ts.front()) > 1e-9)
        throw UsageError(spec + ": target grid must start at t = 0");
    if (domain_length > 0.0 && std::abs(ts.back() - domain_length) > 1e-9)
        throw UsageError("sampled target grid does not span [0, H]: " + spec);
    auto f = sampled(std::move(ts), std::move(values));
    f.description_ = spec;
    return f;
}

WeightFunction WeightFunction::unit() { return WeightFunction(); }

WeightFunction WeightFunction::sampled(std::vector<double> ts, std::vector<Complex> values) {
    if (ts.size() != values.size() || ts.size() < 2)
        throw DomainError("WeightFunction: sampled weight needs matching t/value arrays");
    WeightFunction w;
    std::vector<double> re(ts.size()), im(ts.size());
    double max_im = 0.0;
    for (size_t i = 0; i < ts.size(); ++i) {
        re[i] = values[i].real();
        im[i] = values[i].imag();
        max_im = std::max(max_im, std::abs(im[i]));
    }
    w.kind_ = max_im <= 1e-12 ? Kind::SampledReal : Kind::SampledComplex;
    w.re_ = PchipInterpolant(ts, re);
    w.im_ = PchipInterpolant(std::move(ts), im);
    w.description_ = "sampled";
    return w;
}

WeightFunction WeightFunction::parse(const std::string& spec) {
    if (spec.empty() || spec == "unit") return unit();
    std::vector<double> ts;
    std::vector<Complex> values;
    load_samples_csv(spec, ts, values);
    auto w = sampled(std::move(ts), std::move(values));
    w.description_ = spec;
    return w;
}

Complex WeightFunction::eval(double t_abs) const {
    if (kind_ == Kind::Unit) return {1.0, 0.0};
    return {re_(t_abs), im_(t_abs)};
}

void load_samples_csv(const std::string& path, std::vector<double>& ts,
                      std::vector<Complex>& values) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open sample file: " + path);
    ts.clear();
    values.clear();
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto parts = split(line, ',');
        if (parts.size() != 3) throw UsageError(path + ": expected 't,re,im' rows");
        if (lineno == 1 && parts[0] == "t") continue; // header
        const double t = parse_real(parts[0], "sample file");
        if (!ts.empty() && !(t > ts.back()))
            throw UsageError(path + ": sample grid must be strictly increasing");
        ts.push_back(t);
        values.emplace_back(parse_real(parts[1], "sample file"), parse_real(parts[2], "sample file"));
    }
    if (ts.size() < 2) throw UsageError(path + ": need at least two samples");
}

} // namespace zetalab
