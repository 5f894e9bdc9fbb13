#include "zetalab/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace zetalab {

namespace {

// Gauss 7 / Kronrod 15 pair on [-1, 1].
constexpr std::array<double, 8> kNodes = {
    0.000000000000000, 0.405845151377397, 0.741531185599394, 0.949107912342759,
    0.207784955007898, 0.586087235467691, 0.864864423359769, 0.991455371120813,
};
constexpr std::array<double, 8> kGaussW = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870,
    0.0, 0.0, 0.0, 0.0,
};
constexpr std::array<double, 8> kKronrodW = {
    0.209482141084728, 0.190350578064785, 0.140653259715525, 0.063092092629979,
    0.204432940075298, 0.169004726639267, 0.104790010322250, 0.022935322010529,
};

struct PanelEstimate {
    double value = 0.0;     // finer estimate of the integral of |curve|
    double error = 0.0;     // two-level disagreement
    bool near_zero = false; // Re and Im both change sign inside the panel
};

PanelEstimate eval_gk(const Curve& curve, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    // Nodes in ascending order for the sign-change scan.
    std::array<double, 15> xs;
    std::array<Complex, 15> vs;
    int idx = 0;
    for (int i = 7; i >= 1; --i) xs[idx++] = mid - half * kNodes[static_cast<size_t>(i)];
    xs[idx++] = mid;
    for (int i = 1; i <= 7; ++i) xs[idx++] = mid + half * kNodes[static_cast<size_t>(i)];
    for (int i = 0; i < 15; ++i) vs[static_cast<size_t>(i)] = curve(xs[static_cast<size_t>(i)]);

    auto abs_at = [&](int offset_index) { return std::abs(vs[static_cast<size_t>(offset_index)]); };

    double g7 = kGaussW[0] * abs_at(7);
    double k15 = kKronrodW[0] * abs_at(7);
    for (int i = 1; i <= 7; ++i) {
        const double pair = abs_at(7 - i) + abs_at(7 + i);
        g7 += kGaussW[static_cast<size_t>(i)] * pair;
        k15 += kKronrodW[static_cast<size_t>(i)] * pair;
    }
    g7 *= half;
    k15 *= half;

    bool re_flip = false, im_flip = false;
    for (int i = 1; i < 15; ++i) {
        const auto& prev = vs[static_cast<size_t>(i - 1)];
        const auto& cur = vs[static_cast<size_t>(i)];
        if ((prev.real() < 0.0) != (cur.real() < 0.0)) re_flip = true;
        if ((prev.imag() < 0.0) != (cur.imag() < 0.0)) im_flip = true;
    }
    return {k15, std::abs(k15 - g7), re_flip && im_flip};
}

PanelEstimate eval_simpson(const Curve& curve, double a, double b) {
    const double h = (b - a) / 4.0;
    std::array<double, 5> f;
    std::array<Complex, 5> vs;
    for (int i = 0; i < 5; ++i) {
        vs[static_cast<size_t>(i)] = curve(a + h * i);
        f[static_cast<size_t>(i)] = std::abs(vs[static_cast<size_t>(i)]);
    }
    const double coarse = (b - a) / 6.0 * (f[0] + 4.0 * f[2] + f[4]);
    const double fine =
        h / 3.0 * (f[0] + 4.0 * f[1] + 2.0 * f[2] + 4.0 * f[3] + f[4]);

    bool re_flip = false, im_flip = false;
    for (int i = 1; i < 5; ++i) {
        if ((vs[static_cast<size_t>(i - 1)].real() < 0.0) != (vs[static_cast<size_t>(i)].real() < 0.0)) re_flip = true;
        if ((vs[static_cast<size_t>(i - 1)].imag() < 0.0) != (vs[static_cast<size_t>(i)].imag() < 0.0)) im_flip = true;
    }
    return {fine + (fine - coarse) / 15.0, std::abs(fine - coarse) / 15.0, re_flip && im_flip};
}

} // namespace

QuadratureConfig QuadratureConfig::for_segment(double length, double t_start, double abs_tol) {
    QuadratureConfig cfg;
    cfg.base_panels =
        std::max(4, static_cast<int>(std::ceil(8.0 * length * std::log(2.0 + std::abs(t_start)))));
    cfg.abs_tol = abs_tol;
    return cfg;
}

IntegralResult integrate_abs(const Curve& curve, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw DomainError("integrate_abs: requires a < b");

    struct Panel {
        double a, b;
        int depth;
    };

    const double total_width = b - a;
    std::vector<Panel> stack;
    stack.reserve(64);
    for (int i = cfg.base_panels - 1; i >= 0; --i) {
        const double pa = a + total_width * i / cfg.base_panels;
        const double pb = a + total_width * (i + 1) / cfg.base_panels;
        stack.push_back({pa, pb, 0});
    }

    double sum = 0.0, comp = 0.0, err_sum = 0.0;
    bool met = true;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const PanelEstimate est = (cfg.rule == QuadRule::GaussKronrod715)
                                      ? eval_gk(curve, p.a, p.b)
                                      : eval_simpson(curve, p.a, p.b);
        const double tol_panel = cfg.abs_tol * (p.b - p.a) / total_width;
        const bool want_split =
            est.error > tol_panel || (est.near_zero && est.error > 0.01 * tol_panel);
        if (want_split && p.depth < cfg.max_depth) {
            const double mid = 0.5 * (p.a + p.b);
            stack.push_back({mid, p.b, p.depth + 1});
            stack.push_back({p.a, mid, p.depth + 1});
            continue;
        }
        if (est.error > tol_panel) met = false;
        const double y = est.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err_sum += est.error;
    }
    return {sum, err_sum, met};
}

IntegralResult l1_translate_distance(const TargetFunction& f, const LineSegment& seg,
                                     const WeightFunction& G, const QuadratureConfig& cfg) {
    seg.validate();
    if (std::abs(f.domain_length() - seg.length) > 1e-9 * std::max(1.0, seg.length))
        throw DomainError("l1_translate_distance: target domain length must equal segment length");
    const Curve curve = [&](double t) {
        const Complex z = eval_zeta(Complex(seg.sigma, seg.t_start + t), cfg.zeta_acc);
        return f.eval(t, cfg.zeta_acc) - G.eval(seg.t_start + t) * z;
    };
    return integrate_abs(curve, 0.0, seg.length, cfg);
}

double sup_translate_distance(const TargetFunction& f, const LineSegment& seg,
                              const WeightFunction& G, const QuadratureConfig& cfg) {
    seg.validate();
    cfg.validate();
    const int n = 4 * cfg.base_panels;
    double best = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = seg.length * i / n;
        const Complex z = eval_zeta(Complex(seg.sigma, seg.t_start + t), cfg.zeta_acc);
        best = std::max(best, std::abs(f.eval(t, cfg.zeta_acc) - G.eval(seg.t_start + t) * z));
    }
    return best;
}

IntegralResult short_interval_mean(const LineSegment& seg, const QuadratureConfig& cfg) {
    seg.validate();
    const Curve curve = [&](double t) {
        return eval_zeta(Complex(seg.sigma, t), cfg.zeta_acc);
    };
    return integrate_abs(curve, seg.t_start, seg.t_start + seg.length, cfg);
}

} // namespace zetalab
