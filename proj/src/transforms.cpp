#include "gft/transforms.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "gft/error.hpp"

namespace gft {

namespace {

using FnPtr = std::shared_ptr<const AnalyticFn>;

void require_normalized(const AnalyticFn& f, const char* op) {
    if (!f.normalized) {
        throw Error(ErrorKind::domain,
                    std::string(op) + " requires a normalized source, got " + f.describe());
    }
}

// Attaches the value evaluator (path integral of df) and finishes the bundle.
TransformedFn finish(OperatorSpec op, std::vector<FnPtr> sources, AnalyticFn fn) {
    const Evaluator df = fn.df;
    fn.f = [df](cplx z) { return integrate_from_origin(df, z); };
    fn.value_by_quadrature = true;
    fn.normalized = true;
    const auto pre = fn.pre_schwarzian;
    fn.ddf = [pre, df](cplx z) { return pre(z) * df(z); };
    std::string name = std::string(operator_id(op.kind)) + "[";
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (i) name += ", ";
        name += sources[i]->describe();
    }
    name += "]";
    fn.name = std::move(name);
    fn.params.clear();
    if (op.kind == OperatorKind::hornich_scale || op.kind == OperatorKind::j_gamma) {
        fn.params["gamma"] = op.gamma;
    }
    if (op.kind == OperatorKind::cesaro) fn.params["beta"] = op.beta;
    return TransformedFn{op, std::move(sources), std::move(fn)};
}

// f'(z)/f(z) - 1/z, the log-derivative of f(z)/z; limit f''(0)/2 at 0.
cplx log_derivative_over_z(const AnalyticFn& f, cplx z) {
    if (z == cplx{0.0}) return 0.5 * f.ddf(z);
    return f.df(z) / f.f(z) - 1.0 / z;
}

cplx f_over_z(const AnalyticFn& f, cplx z) {
    if (z == cplx{0.0}) return cplx{1.0};
    return f.f(z) / z;
}

}  // namespace

std::string OperatorSpec::describe() const {
    std::ostringstream os;
    os << operator_id(kind);
    if (kind == OperatorKind::hornich_scale || kind == OperatorKind::j_gamma) {
        os << "(gamma=" << gamma.real() << (gamma.imag() < 0 ? "" : "+") << gamma.imag() << "i)";
    } else if (kind == OperatorKind::cesaro) {
        os << "(beta=" << beta << ")";
    }
    return os.str();
}

const char* operator_id(OperatorKind kind) noexcept {
    switch (kind) {
        case OperatorKind::alexander: return "alexander";
        case OperatorKind::hornich_scale: return "hornich-scale";
        case OperatorKind::hornich_add: return "hornich-add";
        case OperatorKind::j_gamma: return "j-gamma";
        case OperatorKind::cesaro: return "cesaro";
    }
    return "unknown";
}

OperatorKind parse_operator(std::string_view id) {
    for (auto k : {OperatorKind::alexander, OperatorKind::hornich_scale,
                   OperatorKind::hornich_add, OperatorKind::j_gamma, OperatorKind::cesaro}) {
        if (id == operator_id(k)) return k;
    }
    throw Error(ErrorKind::usage, "unknown operator '" + std::string(id) + "'");
}

cplx parse_complex(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s.push_back(c);
    }
    auto bad = [&] { return Error(ErrorKind::usage, "malformed complex number '" + std::string(text) + "'"); };
    auto parse_real = [&](std::string_view part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        std::string tmp(part.front() == '+' ? part.substr(1) : part);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(tmp.data(), tmp.data() + tmp.size(), v);
        if (ec != std::errc{} || ptr != tmp.data() + tmp.size()) throw bad();
        return v;
    };
    if (s.empty()) throw bad();
    if (s.back() != 'i') {
        if (s == "+" || s == "-") throw bad();
        return {parse_real(s), 0.0};
    }
    s.pop_back();
    // The split is the last sign that is neither leading nor part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_real(s)};
    const std::string_view sv(s);
    const std::string_view re = sv.substr(0, split);
    if (re == "+" || re == "-") throw bad();
    return {parse_real(re), parse_real(sv.substr(split))};
}

TransformedFn alexander(const AnalyticFn& f) {
    require_normalized(f, "alexander");
    auto src = std::make_shared<const AnalyticFn>(f);
    AnalyticFn fn;
    fn.df = [src](cplx z) { return f_over_z(*src, z); };
    fn.pre_schwarzian = [src](cplx z) { return log_derivative_over_z(*src, z); };
    fn.log_df = [src](cplx z) { return log_f_over_z_at(*src, z); };
    if (src->series_of) {
        fn.series_of = [src](std::size_t n) { return integrate(div_by_z(src->series_of(n))); };
    }
    return finish({OperatorKind::alexander}, {src}, std::move(fn));
}

TransformedFn hornich_scale(cplx gamma, const AnalyticFn& f) {
    require_normalized(f, "hornich-scale");
    auto src = std::make_shared<const AnalyticFn>(f);
    AnalyticFn fn;
    fn.df = [src, gamma](cplx z) {
        if (gamma == cplx{0.0}) return cplx{1.0};
        return std::exp(gamma * log_df_at(*src, z));
    };
    fn.pre_schwarzian = [src, gamma](cplx z) { return gamma * src->pre_schwarzian_at(z); };
    fn.log_df = [src, gamma](cplx z) { return gamma * log_df_at(*src, z); };
    if (src->series_of) {
        fn.series_of = [src, gamma](std::size_t n) {
            return integrate(cpow(differentiate(src->series_of(n)), gamma));
        };
    }
    OperatorSpec op{OperatorKind::hornich_scale, gamma, 0.0};
    return finish(op, {src}, std::move(fn));
}

TransformedFn hornich_add(const AnalyticFn& f, const AnalyticFn& g) {
    require_normalized(f, "hornich-add");
    require_normalized(g, "hornich-add");
    auto a = std::make_shared<const AnalyticFn>(f);
    auto b = std::make_shared<const AnalyticFn>(g);
    AnalyticFn fn;
    fn.df = [a, b](cplx z) { return a->df(z) * b->df(z); };
    fn.pre_schwarzian = [a, b](cplx z) { return a->pre_schwarzian_at(z) + b->pre_schwarzian_at(z); };
    fn.log_df = [a, b](cplx z) { return log_df_at(*a, z) + log_df_at(*b, z); };
    if (a->series_of && b->series_of) {
        fn.series_of = [a, b](std::size_t n) {
            return integrate(mul(differentiate(a->series_of(n)), differentiate(b->series_of(n))));
        };
    }
    return finish({OperatorKind::hornich_add}, {a, b}, std::move(fn));
}

TransformedFn j_gamma(cplx gamma, const AnalyticFn& f) {
    require_normalized(f, "j-gamma");
    auto src = std::make_shared<const AnalyticFn>(f);
    AnalyticFn fn;
    fn.df = [src, gamma](cplx z) {
        if (gamma == cplx{0.0}) return cplx{1.0};
        return std::exp(gamma * log_f_over_z_at(*src, z));
    };
    fn.pre_schwarzian = [src, gamma](cplx z) { return gamma * log_derivative_over_z(*src, z); };
    fn.log_df = [src, gamma](cplx z) { return gamma * log_f_over_z_at(*src, z); };
    if (src->series_of) {
        fn.series_of = [src, gamma](std::size_t n) {
            return integrate(cpow(div_by_z(src->series_of(n)), gamma));
        };
    }
    OperatorSpec op{OperatorKind::j_gamma, gamma, 0.0};
    return finish(op, {src}, std::move(fn));
}

TransformedFn cesaro_beta(double beta, const AnalyticFn& f, bool allow_negative_beta) {
    require_normalized(f, "cesaro");
    if (!std::isfinite(beta) || (beta < 0.0 && !allow_negative_beta)) {
        throw Error(ErrorKind::domain, "cesaro requires beta >= 0");
    }
    auto src = std::make_shared<const AnalyticFn>(f);
    AnalyticFn fn;
    fn.df = [src, beta](cplx z) {
        return f_over_z(*src, z) * std::exp(-beta * std::log(1.0 - z));
    };
    // 1 + z C''/C' = z f'/f + beta z / (1 - z)
    fn.pre_schwarzian = [src, beta](cplx z) {
        return log_derivative_over_z(*src, z) + beta / (1.0 - z);
    };
    fn.log_df = [src, beta](cplx z) {
        return log_f_over_z_at(*src, z) - beta * std::log(1.0 - z);
    };
    if (src->series_of) {
        fn.series_of = [src, beta](std::size_t n) {
            return integrate(mul(div_by_z(src->series_of(n)), binomial_series(-beta, n)));
        };
    }
    OperatorSpec op{OperatorKind::cesaro, cplx{1.0}, beta};
    return finish(op, {src}, std::move(fn));
}

TransformedFn apply_operator(const OperatorSpec& op, const AnalyticFn& f, const AnalyticFn* g) {
    switch (op.kind) {
        case OperatorKind::alexander: return alexander(f);
        case OperatorKind::hornich_scale: return hornich_scale(op.gamma, f);
        case OperatorKind::hornich_add:
            if (!g) throw Error(ErrorKind::usage, "hornich-add needs a second function");
            return hornich_add(f, *g);
        case OperatorKind::j_gamma: return j_gamma(op.gamma, f);
        case OperatorKind::cesaro: return cesaro_beta(op.beta, f);
    }
    throw Error(ErrorKind::usage, "unknown operator");
}

cplx path_integral_value(const TransformedFn& t, cplx z, const QuadratureOptions& opts) {
    if (!(std::abs(z) < 1.0)) {
        std::ostringstream os;
        os << "path_integral_value: z = " << z << " is outside the unit disk";
        throw Error(ErrorKind::domain, os.str());
    }
    return integrate_from_origin(t.fn.df, z, opts);
}

}  // namespace gft
