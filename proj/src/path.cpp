#include "gft/path.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "gft/error.hpp"

namespace gft {

namespace {

GaussLegendre16 make_gauss_legendre16() {
    constexpr int n = 16;
    GaussLegendre16 gl{};
    for (int i = 0; i < n; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        gl.nodes[i] = x;
        gl.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return gl;
}

struct PanelResult {
    cplx value;
    double scale;  // |b - a| * max |integrand| over the nodes
};

PanelResult gauss_panel(const Evaluator& fn, cplx a, cplx b) {
    const auto& gl = gauss_legendre16();
    const cplx half = 0.5 * (b - a);
    const cplx mid = 0.5 * (a + b);
    cplx sum{};
    double peak = 0.0;
    for (int i = 0; i < 16; ++i) {
        const cplx v = fn(mid + half * gl.nodes[i]);
        const double m = std::abs(v);
        if (!std::isfinite(m)) {
            std::ostringstream os;
            os << "quadrature: non-finite integrand at w = " << (mid + half * gl.nodes[i]);
            throw Error(ErrorKind::quadrature, os.str());
        }
        peak = std::max(peak, m);
        sum += gl.weights[i] * v;
    }
    return {sum * half, std::abs(b - a) * peak};
}

cplx adapt(const Evaluator& fn, cplx a, cplx b, const PanelResult& whole, int depth,
           const QuadratureOptions& opts, cplx z_end) {
    const cplx m = 0.5 * (a + b);
    const PanelResult left = gauss_panel(fn, a, m);
    const PanelResult right = gauss_panel(fn, m, b);
    const cplx refined = left.value + right.value;
    const double diff = std::abs(refined - whole.value);
    const double floor = 1e-3 * std::max(left.scale, right.scale);
    if (diff <= opts.rtol * std::max(std::abs(refined), floor)) return refined;
    if (depth >= opts.max_depth) {
        std::ostringstream os;
        os << "quadrature: no convergence on [0, " << z_end << "] after depth " << depth
           << " (panel [" << a << ", " << b << "], disagreement " << diff << ")";
        throw Error(ErrorKind::quadrature, os.str());
    }
    return adapt(fn, a, m, left, depth + 1, opts, z_end) +
           adapt(fn, m, b, right, depth + 1, opts, z_end);
}

}  // namespace

const GaussLegendre16& gauss_legendre16() {
    static const GaussLegendre16 gl = make_gauss_legendre16();
    return gl;
}

cplx integrate_segment(const Evaluator& integrand, cplx a, cplx b,
                       const QuadratureOptions& opts) {
    if (a == b) return cplx{0.0};
    const PanelResult whole = gauss_panel(integrand, a, b);
    return adapt(integrand, a, b, whole, 1, opts, b);
}

cplx continued_log(const Evaluator& g, cplx z, int initial_steps) {
    const cplx g0 = g(cplx{0.0});
    if (std::abs(g0 - 1.0) > 1e-8) {
        throw Error(ErrorKind::branch_anchor, "continued_log: g(0) must equal 1");
    }
    constexpr double kMaxPhaseStep = std::numbers::pi / 4;
    constexpr int kMaxDepth = 30;

    auto sample = [&](double t) {
        const cplx w = t * z;
        const cplx v = g(w);
        const double m = std::abs(v);
        if (!std::isfinite(m) || m < 1e-280) {
            std::ostringstream os;
            os << "branch tracking: function vanishes or is singular near w = " << w;
            throw Error(ErrorKind::branch_tracking, os.str());
        }
        return v;
    };

    cplx acc = std::log(g0);
    // Explicit stack keeps the recursion bounded and the order left-to-right.
    struct Step { double t0, t1; int depth; };
    std::vector<Step> stack;
    cplx prev = g0;
    for (int k = initial_steps; k >= 1; --k) {
        stack.push_back({static_cast<double>(k - 1) / initial_steps,
                         static_cast<double>(k) / initial_steps, 0});
    }
    while (!stack.empty()) {
        Step s = stack.back();
        stack.pop_back();
        const cplx v1 = sample(s.t1);
        const cplx d = std::log(v1 / prev);
        if (std::abs(d.imag()) > kMaxPhaseStep) {
            if (s.depth >= kMaxDepth) {
                std::ostringstream os;
                os << "branch tracking: phase does not resolve near w = " << s.t1 * z;
                throw Error(ErrorKind::branch_tracking, os.str());
            }
            const double tm = 0.5 * (s.t0 + s.t1);
            stack.push_back({tm, s.t1, s.depth + 1});
            stack.push_back({s.t0, tm, s.depth + 1});
            continue;
        }
        acc += d;
        prev = v1;
    }
    return acc;
}

cplx log_df_at(const AnalyticFn& f, cplx z) {
    if (f.log_df) return f.log_df(z);
    return continued_log(f.df, z);
}

cplx log_f_over_z_at(const AnalyticFn& f, cplx z) {
    if (f.log_f_over_z) return f.log_f_over_z(z);
    const auto& fn = f.f;
    return continued_log([&fn](cplx w) { return w == cplx{0.0} ? cplx{1.0} : fn(w) / w; }, z);
}

}  // namespace gft
