#include "zetalab/special_functions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <vector>

namespace zetalab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kLogPi = 1.1447298858494001741; // log(pi)
constexpr double kHalfLog2Pi = 0.91893853320467274178; // log(2 pi)/2

void ensure_finite(const Complex& s, const char* what) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError(std::string(what) + ": non-finite argument");
}

// Cached log n, shared by all zeta evaluations.
class LogTable {
public:
    double operator()(long n) {
        if (n < static_cast<long>(size_.load(std::memory_order_acquire)))
            return logs_[static_cast<size_t>(n)];
        std::lock_guard<std::mutex> lock(mu_);
        size_t need = static_cast<size_t>(n) + 1;
        if (need > logs_.size()) {
            size_t cap = std::max(need, logs_.size() * 2 + 64);
            logs_.reserve(cap);
            for (size_t k = logs_.size(); k < cap; ++k)
                logs_.push_back(k == 0 ? 0.0 : std::log(static_cast<double>(k)));
            size_.store(logs_.size(), std::memory_order_release);
        }
        return logs_[static_cast<size_t>(n)];
    }

private:
    std::mutex mu_;
    std::vector<double> logs_;
    std::atomic<size_t> size_{0};
};

double log_n(long n) {
    static LogTable table;
    return table(n);
}

// B_{2k} / (2k)!.  Exact rationals for small k; for larger k the slowly
// converging direct sum for zeta(2k) has negligible truncation error, so
// (-1)^{k+1} * 2 * zeta(2k) / (2 pi)^{2k} is used.
const std::vector<double>& bernoulli_factorial_ratios() {
    static const std::vector<double> ratios = [] {
        std::vector<double> r(81, 0.0);
        r[1] = 1.0 / 12.0;
        r[2] = -1.0 / 720.0;
        r[3] = 1.0 / 30240.0;
        r[4] = -1.0 / 1209600.0;
        r[5] = 1.0 / 47900160.0;
        r[6] = -691.0 / (2730.0 * 479001600.0);
        r[7] = 7.0 / (6.0 * 87178291200.0);
        r[8] = -3617.0 / (510.0 * 20922789888000.0);
        for (int k = 9; k <= 80; ++k) {
            double z = 1.0; // zeta(2k)
            for (int n = 2; n <= 64; ++n) {
                double term = std::pow(static_cast<double>(n), -2.0 * k);
                z += term;
                if (term < 1e-25) break;
            }
            double mag = 2.0 * z * std::exp(-2.0 * k * std::log(kTwoPi));
            r[static_cast<size_t>(k)] = (k % 2 == 1) ? mag : -mag;
        }
        return r;
    }();
    return ratios;
}

struct EmResult {
    Complex value;
    bool converged = false;
};

// Euler-Maclaurin evaluation for Re(s) >= 0, Im(s) >= 0, s != 1.
EmResult zeta_em_attempt(const Complex& s, long n_len, double tol) {
    const double sigma = s.real();
    const double t = s.imag();
    const auto& coeff = bernoulli_factorial_ratios();

    // Truncated Dirichlet sum, Kahan compensated.
    double sum_re = 0.0, sum_im = 0.0, c_re = 0.0, c_im = 0.0;
    for (long n = 1; n < n_len; ++n) {
        const double L = log_n(n);
        const double amp = std::exp(-sigma * L);
        const double phase = -t * L;
        const double tr = amp * std::cos(phase);
        const double ti = amp * std::sin(phase);
        double y = tr - c_re, u = sum_re + y;
        c_re = (u - sum_re) - y;
        sum_re = u;
        y = ti - c_im;
        u = sum_im + y;
        c_im = (u - sum_im) - y;
        sum_im = u;
    }
    Complex total(sum_re, sum_im);

    const double logN = log_n(n_len);
    const Complex n_pow_ms = std::exp(-s * logN); // N^{-s}
    total += std::exp((1.0 - s) * logN) / (s - 1.0);
    total += 0.5 * n_pow_ms;

    // Bernoulli corrections: c_k * (s)(s+1)...(s+2k-2) * N^{-s-2k+1}
    Complex poch = s;
    Complex npow = n_pow_ms / static_cast<double>(n_len); // N^{-s-1}
    const double inv_n2 = 1.0 / (static_cast<double>(n_len) * n_len);
    double prev_mag = std::numeric_limits<double>::infinity();
    const int k_max = static_cast<int>(coeff.size()) - 1;
    for (int k = 1; k <= k_max; ++k) {
        const Complex term = coeff[static_cast<size_t>(k)] * poch * npow;
        const double mag = std::abs(term);
        if (mag > prev_mag) return {total, false}; // diverging tail: N too small
        // Remainder bound: |next term| * |(s + 2k + 1)/(sigma + 2k + 1)|
        const double ratio = std::abs(s + Complex(2.0 * k + 1.0, 0.0)) / (sigma + 2.0 * k + 1.0);
        if (mag * std::max(1.0, ratio) <= 0.5 * tol) {
            total += term;
            return {total, true};
        }
        total += term;
        prev_mag = mag;
        poch *= (s + Complex(2.0 * k - 1.0, 0.0)) * (s + Complex(2.0 * k, 0.0));
        npow *= inv_n2;
        (void)t;
    }
    return {total, false};
}

Complex zeta_euler_maclaurin(const Complex& s, const EvalAccuracy& acc) {
    const double t = s.imag();
    long n_len = std::max<long>(16, static_cast<long>(std::ceil((t + 20.0) / 4.0)));
    n_len = std::min(n_len, acc.max_terms);
    for (int attempt = 0; attempt < 12; ++attempt) {
        EmResult r = zeta_em_attempt(s, n_len, acc.abs_tol);
        if (r.converged) return r.value;
        if (n_len >= acc.max_terms)
            throw AccuracyError("eval_zeta: max_terms insufficient for abs_tol at this height");
        n_len = std::min(acc.max_terms, n_len * 2);
    }
    throw AccuracyError("eval_zeta: Euler-Maclaurin failed to converge");
}

// log sin(w), stable for large |Im w|.  Branch is only consistent up to
// 2 pi i, which is irrelevant under exp().
Complex log_sin(const Complex& w) {
    const double im = w.imag();
    if (im > 18.0) {
        // sin w = (i/2) e^{-iw} (1 - e^{2iw})
        return Complex(-std::numbers::ln2, kPi / 2.0) - Complex(0, 1) * w +
               std::log(1.0 - std::exp(Complex(0, 2) * w));
    }
    if (im < -18.0) {
        // sin w = (-i/2) e^{iw} (1 - e^{-2iw})
        return Complex(-std::numbers::ln2, -kPi / 2.0) + Complex(0, 1) * w +
               std::log(1.0 - std::exp(Complex(0, -2) * w));
    }
    const Complex sw = std::sin(w);
    if (sw == Complex(0.0, 0.0)) throw DomainError("log_sin: zero of sine");
    return std::log(sw);
}

// log Gamma on the whole plane minus the poles; reflection for Re(z) <= 0.
// Branch is consistent only up to 2 pi i on the reflected side.
Complex log_gamma_any(const Complex& z) {
    if (z.real() > 0.0) return log_gamma(z);
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
        throw DomainError("log_gamma_any: pole at non-positive integer");
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return Complex(kLogPi, 0.0) - log_sin(kPi * z) - log_gamma(1.0 - z);
}

} // namespace

EvalAccuracy EvalAccuracy::for_height(double t) {
    EvalAccuracy acc;
    acc.abs_tol = (std::abs(t) <= 1.0e4) ? 1.0e-10 : 1.0e-8;
    return acc;
}

Complex log_gamma(const Complex& z) {
    ensure_finite(z, "log_gamma");
    if (z.real() <= 0.0)
        throw DomainError("log_gamma: requires Re(z) > 0 (callers reflect as needed)");
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));

    // Shift until |w| is large enough for the Stirling series.
    Complex w = z;
    Complex shift(0.0, 0.0);
    while (std::abs(w) < 16.0) {
        shift += std::log(w);
        w += 1.0;
    }

    static const double stirling[] = {
        1.0 / 12.0,        -1.0 / 360.0,      1.0 / 1260.0,   -1.0 / 1680.0,
        1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0,    -3617.0 / 122400.0,
    };
    Complex result = (w - 0.5) * std::log(w) - w + kHalfLog2Pi;
    const Complex inv2 = 1.0 / (w * w);
    Complex p = 1.0 / w;
    for (double c : stirling) {
        result += c * p;
        p *= inv2;
    }
    return result - shift;
}

Complex chi_factor(const Complex& s) {
    ensure_finite(s, "chi_factor");
    // chi(s) = pi^{s - 1/2} Gamma((1-s)/2) / Gamma(s/2)
    const Complex a = (1.0 - s) / 2.0;
    const Complex b = s / 2.0;
    const Complex log_chi = (s - 0.5) * kLogPi + log_gamma_any(a) - log_gamma_any(b);
    return std::exp(log_chi);
}

double ThetaExpansion::eval(double t) {
    const double inv = 1.0 / t;
    const double inv2 = inv * inv;
    return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 +
           inv * (kC1 + inv2 * (kC3 + inv2 * kC5));
}

double ThetaExpansion::remainder_bound(double t) {
    // Next term is 127/(430080 t^7); factor 2 absorbs the rest of the tail.
    return 2.0 * 127.0 / 430080.0 * std::pow(t, -7.0);
}

double riemann_siegel_theta_reference(double t) {
    if (t < 0.0) return -riemann_siegel_theta_reference(-t);
    return std::imag(log_gamma(Complex(0.25, 0.5 * t))) - 0.5 * t * kLogPi;
}

double riemann_siegel_theta(double t) {
    if (!std::isfinite(t)) throw DomainError("riemann_siegel_theta: non-finite t");
    if (t < 0.0) return -riemann_siegel_theta(-t);
    if (std::abs(t) > kMaxHeight)
        throw DomainError("riemann_siegel_theta: height cap 1e7 exceeded");
    if (t >= 10.0) return ThetaExpansion::eval(t);
    return riemann_siegel_theta_reference(t);
}

// Psi(x) = cos(2 pi (x^2 - x - 1/16)) / cos(2 pi x), with the removable
// singularities at x = 1/4, 3/4 handled by l'Hopital.
double rs_psi(double x) {
    const double g = x * x - x - 1.0 / 16.0;
    const double denom = std::cos(kTwoPi * x);
    if (std::abs(denom) > 1e-3) return std::cos(kTwoPi * g) / denom;
    return (2.0 * x - 1.0) * std::sin(kTwoPi * g) / std::sin(kTwoPi * x);
}

double riemann_siegel_z(double t) {
    if (t < 0.0) return riemann_siegel_z(-t);
    const double tau = t / kTwoPi;
    const double p = std::sqrt(tau);
    const long m = static_cast<long>(std::floor(p));
    const double theta = riemann_siegel_theta(t);

    double sum = 0.0;
    for (long n = 1; n <= m; ++n)
        sum += std::cos(theta - t * log_n(n)) / std::sqrt(static_cast<double>(n));
    sum *= 2.0;

    // Corrections: (-1)^{m-1} tau^{-1/4} (C0 + C1 tau^{-1/2}) with
    // C0 = Psi(p - m) and C1 = -Psi'''(p - m) / (96 pi^2), the third
    // derivative taken by central finite differences.
    const double x = p - static_cast<double>(m);
    const double c0 = rs_psi(x);
    const double h = 0.01;
    const double psi3 = (-rs_psi(x - 2.0 * h) + 2.0 * rs_psi(x - h) - 2.0 * rs_psi(x + h) +
                         rs_psi(x + 2.0 * h)) /
                        (2.0 * h * h * h);
    const double c1 = -psi3 / (96.0 * kPi * kPi);
    const double sign = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^{m-1}
    sum += sign * std::pow(tau, -0.25) * (c0 + c1 / std::sqrt(tau));
    return sum;
}

Complex eval_zeta(const Complex& s, const EvalAccuracy& acc) {
    acc.validate();
    ensure_finite(s, "eval_zeta");
    if (s == Complex(1.0, 0.0)) throw PoleError("eval_zeta: pole at s = 1");
    if (std::abs(s.imag()) > kMaxHeight)
        throw DomainError("eval_zeta: |Im s| exceeds the 1e7 height cap");
    if (s.imag() < 0.0) return std::conj(eval_zeta(std::conj(s), acc));
    if (s.real() < 0.0) return chi_factor(s) * eval_zeta(1.0 - s, acc);

    // Riemann-Siegel fast path on the critical line at large height.
    if (s.real() == 0.5 && s.imag() >= 1.0e3 && acc.abs_tol >= 1.0e-3) {
        const double t = s.imag();
        return std::polar(1.0, -riemann_siegel_theta(t)) * riemann_siegel_z(t);
    }
    return zeta_euler_maclaurin(s, acc);
}

HardyZValue hardy_z_full(double t, const EvalAccuracy& acc) {
    if (!std::isfinite(t)) throw DomainError("hardy_z: non-finite t");
    const Complex zeta = eval_zeta(Complex(0.5, t), acc);
    const Complex rotated = std::polar(1.0, riemann_siegel_theta(t)) * zeta;
    return {rotated.real(), rotated.imag()};
}

double hardy_z(double t, const EvalAccuracy& acc) {
    return hardy_z_full(t, acc).value;
}

} // namespace zetalab
