#include "gft/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gft/error.hpp"

namespace gft {

namespace {

constexpr double kLimitExponentTol = 1e-12;

// log(1 - z) with full relative accuracy near 0 (log1p correction on the rounded argument).
cplx log1mz(cplx z) {
    const cplx u = 1.0 - z;
    if (std::abs(z) > 0.25) return std::log(u);
    if (u == cplx{1.0}) return -z;
    return std::log(u) * (-z) / (u - 1.0);
}

// (1 - z)^p on the principal branch.
cplx pow1mz(cplx z, cplx p) { return std::exp(p * log1mz(z)); }

// -log(1 - z) / z, finite at 0.
cplx neg_log_over_z(cplx z) {
    if (std::abs(z) < 1e-4) return 1.0 + z * (0.5 + z * (1.0 / 3.0 + z * 0.25));
    return -log1mz(z) / z;
}

double real_param(const ParamMap& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    if (std::abs(it->second.imag()) > 0.0) {
        throw Error(ErrorKind::domain, "parameter '" + key + "' must be real");
    }
    return it->second.real();
}

double require_lambda(const ParamMap& p) {
    const double lambda = real_param(p, "lambda", 0.0);
    if (!(lambda < 1.0)) throw Error(ErrorKind::domain, "lambda must satisfy lambda < 1");
    return lambda;
}

double require_alpha(const ParamMap& p) {
    const double alpha = real_param(p, "alpha", 0.0);
    if (!(std::abs(alpha) < std::numbers::pi / 2)) {
        throw Error(ErrorKind::domain, "alpha must lie in (-pi/2, pi/2)");
    }
    return alpha;
}

// z (1 - z)^c. With w = 1 - z:
//   f'  = w^(c-1) (1 - (1 + c) z)
//   f'' = c w^(c-2) ((1 + c) z - 2)
AnalyticFn z_times_power(std::string name, ParamMap params, cplx c) {
    AnalyticFn fn;
    fn.name = std::move(name);
    fn.params = std::move(params);
    fn.f = [c](cplx z) { return z * pow1mz(z, c); };
    fn.df = [c](cplx z) { return pow1mz(z, c - 1.0) * (1.0 - (1.0 + c) * z); };
    fn.ddf = [c](cplx z) { return c * pow1mz(z, c - 2.0) * ((1.0 + c) * z - 2.0); };
    fn.pre_schwarzian = [c](cplx z) {
        return (1.0 - c) / (1.0 - z) - (1.0 + c) / (1.0 - (1.0 + c) * z);
    };
    // A linear factor 1 - a z seen along a ray from 0 never crosses the
    // negative axis, so its principal log is the continuous one.
    fn.log_df = [c](cplx z) { return (c - 1.0) * log1mz(z) + std::log(1.0 - (1.0 + c) * z); };
    fn.log_f_over_z = [c](cplx z) { return c * log1mz(z); };
    fn.series_of = [c](std::size_t n) {
        const TaylorPoly b = binomial_series(c, n);
        std::vector<cplx> out(n + 1);
        for (std::size_t k = 1; k <= n; ++k) out[k] = b[k - 1];
        return TaylorPoly(std::move(out));
    };
    return fn;
}

AnalyticFn make_neg_log(std::string name, ParamMap params) {
    AnalyticFn fn;
    fn.name = std::move(name);
    fn.params = std::move(params);
    fn.f = [](cplx z) { return -log1mz(z); };
    fn.df = [](cplx z) { return 1.0 / (1.0 - z); };
    fn.ddf = [](cplx z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
    fn.pre_schwarzian = [](cplx z) { return 1.0 / (1.0 - z); };
    fn.log_df = [](cplx z) { return -log1mz(z); };
    // Re(f(z)/z) > 1/2 for convex f, so the principal branch is continuous.
    fn.log_f_over_z = [](cplx z) { return std::log(neg_log_over_z(z)); };
    fn.series_of = [](std::size_t n) {
        std::vector<cplx> c(n + 1);
        for (std::size_t k = 1; k <= n; ++k) c[k] = 1.0 / static_cast<double>(k);
        return TaylorPoly(std::move(c));
    };
    return fn;
}

AnalyticFn make_convex_extremal(double lambda) {
    const double s = 1.0 - 2.0 * lambda;
    ParamMap params{{"lambda", lambda}};
    if (std::abs(s) < kLimitExponentTol) return make_neg_log("convex_extremal", params);

    AnalyticFn fn;
    fn.name = "convex_extremal";
    fn.params = std::move(params);
    fn.f = [s](cplx z) { return expm1(-s * log1mz(z)) / s; };
    fn.df = [s](cplx z) { return pow1mz(z, -(s + 1.0)); };
    fn.ddf = [s](cplx z) { return (s + 1.0) * pow1mz(z, -(s + 2.0)); };
    fn.pre_schwarzian = [s](cplx z) { return (s + 1.0) / (1.0 - z); };
    fn.log_df = [s](cplx z) { return -(s + 1.0) * log1mz(z); };
    fn.series_of = [s](std::size_t n) {
        const TaylorPoly b = binomial_series(-s, n);
        std::vector<cplx> c(n + 1);
        for (std::size_t k = 1; k <= n; ++k) c[k] = b[k] / s;
        return TaylorPoly(std::move(c));
    };
    return fn;
}

AnalyticFn make_power_map(cplx mu) {
    if (mu == cplx{0.0}) throw Error(ErrorKind::domain, "power_map requires mu != 0");
    AnalyticFn fn;
    fn.name = "power_map";
    fn.params = {{"mu", mu}};
    fn.normalized = false;
    fn.f = [mu](cplx z) { return pow1mz(z, mu); };
    fn.df = [mu](cplx z) { return -mu * pow1mz(z, mu - 1.0); };
    fn.ddf = [mu](cplx z) { return mu * (mu - 1.0) * pow1mz(z, mu - 2.0); };
    fn.pre_schwarzian = [mu](cplx z) { return (1.0 - mu) / (1.0 - z); };
    fn.series_of = [mu](std::size_t n) { return binomial_series(mu, n); };
    return fn;
}

AnalyticFn make_identity() {
    AnalyticFn fn;
    fn.name = "identity";
    fn.f = [](cplx z) { return z; };
    fn.df = [](cplx) { return cplx{1.0}; };
    fn.ddf = [](cplx) { return cplx{0.0}; };
    fn.pre_schwarzian = [](cplx) { return cplx{0.0}; };
    fn.log_df = [](cplx) { return cplx{0.0}; };
    fn.log_f_over_z = [](cplx) { return cplx{0.0}; };
    fn.series_of = [](std::size_t n) { return TaylorPoly::identity(n); };
    return fn;
}

}  // namespace

cplx expm1(cplx u) {
    if (std::abs(u) < 1e-5) return u * (1.0 + u * (0.5 + u * (1.0 / 6.0 + u / 24.0)));
    return std::exp(u) - 1.0;
}

cplx AnalyticFn::pre_schwarzian_at(cplx z) const {
    if (pre_schwarzian) return pre_schwarzian(z);
    return ddf(z) / df(z);
}

std::string AnalyticFn::describe() const {
    std::ostringstream os;
    os << name;
    if (!params.empty()) {
        os << '(';
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) os << ", ";
            first = false;
            os << k << '=';
            if (v.imag() == 0.0) {
                os << v.real();
            } else {
                os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << 'i';
            }
        }
        os << ')';
    }
    return os.str();
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{
        "koebe_order", "half_plane", "neg_log",  "convex_extremal",
        "spiral_extremal", "royster_example", "power_map", "identity"};
    return names;
}

AnalyticFn catalog_build(const CatalogSpec& spec) { return catalog_build(spec.name, spec.params); }

AnalyticFn catalog_build(const std::string& name, const ParamMap& params) {
    if (name == "koebe_order") {
        const double lambda = require_lambda(params);
        return z_times_power(name, {{"lambda", lambda}}, -(2.0 - 2.0 * lambda));
    }
    if (name == "half_plane") return z_times_power(name, {}, -1.0);
    if (name == "neg_log") return make_neg_log(name, {});
    if (name == "convex_extremal") return make_convex_extremal(require_lambda(params));
    if (name == "spiral_extremal") {
        const double lambda = require_lambda(params);
        const double alpha = require_alpha(params);
        const cplx c = 2.0 * (lambda - 1.0) * std::polar(1.0, -alpha) * std::cos(alpha);
        return z_times_power(name, {{"alpha", alpha}, {"lambda", lambda}}, c);
    }
    if (name == "royster_example") return z_times_power(name, {}, cplx{-1.0, 1.0});
    if (name == "power_map") {
        auto it = params.find("mu");
        if (it == params.end()) throw Error(ErrorKind::domain, "power_map requires parameter mu");
        return make_power_map(it->second);
    }
    if (name == "identity") return make_identity();
    throw Error(ErrorKind::catalog, "unknown catalog function '" + name + "'");
}

std::pair<cplx, cplx> log_derivative_pair(const AnalyticFn& f, cplx z) {
    return log_derivative_pair(f, z, f.f(z));
}

std::pair<cplx, cplx> log_derivative_pair(const AnalyticFn& f, cplx z, cplx fz) {
    const cplx d1 = f.df(z);
    if (fz == cplx{0.0} || d1 == cplx{0.0} || !std::isfinite(std::abs(fz)) ||
        !std::isfinite(std::abs(d1))) {
        std::ostringstream os;
        os << "singular sample at z = " << z << " for " << f.describe();
        throw Error(ErrorKind::singular_sample, os.str());
    }
    const cplx p = f.pre_schwarzian_at(z);
    const std::pair<cplx, cplx> out{z * d1 / fz, 1.0 + z * p};
    if (!std::isfinite(std::abs(out.first)) || !std::isfinite(std::abs(out.second))) {
        std::ostringstream os;
        os << "non-finite log-derivative at z = " << z << " for " << f.describe();
        throw Error(ErrorKind::singular_sample, os.str());
    }
    return out;
}

}  // namespace gft
