#include "gft/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gft/error.hpp"

namespace gft {

namespace {

constexpr double kAnchorTol = 1e-12;

void require_same_degree(const TaylorPoly& a, const TaylorPoly& b, const char* op) {
    if (a.degree() != b.degree()) {
        std::ostringstream os;
        os << op << ": degree mismatch (" << a.degree() << " vs " << b.degree() << ")";
        throw Error(ErrorKind::degree_mismatch, os.str());
    }
}

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

TaylorPoly::TaylorPoly(std::size_t degree) : coeffs_(degree + 1) {
    if (degree == 0) throw Error(ErrorKind::domain, "TaylorPoly: degree must be positive");
}

TaylorPoly::TaylorPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw Error(ErrorKind::domain, "TaylorPoly: degree must be positive");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!finite(coeffs_[k])) {
            throw Error(ErrorKind::domain,
                        "TaylorPoly: non-finite coefficient at index " + std::to_string(k));
        }
    }
}

TaylorPoly::TaylorPoly(std::size_t degree, std::initializer_list<cplx> leading)
    : TaylorPoly(degree) {
    if (leading.size() > coeffs_.size()) {
        throw Error(ErrorKind::domain, "TaylorPoly: more coefficients than degree allows");
    }
    std::copy(leading.begin(), leading.end(), coeffs_.begin());
}

TaylorPoly TaylorPoly::constant(std::size_t degree, cplx value) {
    TaylorPoly p(degree);
    p.coeffs_[0] = value;
    return p;
}

TaylorPoly TaylorPoly::identity(std::size_t degree) {
    TaylorPoly p(degree);
    p.coeffs_[1] = 1.0;
    return p;
}

TaylorPoly TaylorPoly::one_minus_z(std::size_t degree) {
    TaylorPoly p(degree);
    p.coeffs_[0] = 1.0;
    p.coeffs_[1] = -1.0;
    return p;
}

bool TaylorPoly::is_normalized() const noexcept {
    return coeffs_[0] == cplx{0.0} && coeffs_[1] == cplx{1.0};
}

TaylorPoly TaylorPoly::operator+(const TaylorPoly& rhs) const {
    require_same_degree(*this, rhs, "add");
    TaylorPoly r(*this);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += rhs.coeffs_[k];
    return r;
}

TaylorPoly TaylorPoly::operator-(const TaylorPoly& rhs) const {
    require_same_degree(*this, rhs, "sub");
    TaylorPoly r(*this);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] -= rhs.coeffs_[k];
    return r;
}

TaylorPoly TaylorPoly::operator*(cplx s) const {
    std::vector<cplx> c(coeffs_);
    for (auto& x : c) x *= s;
    return TaylorPoly(std::move(c));
}

TaylorPoly mul(const TaylorPoly& a, const TaylorPoly& b) {
    require_same_degree(a, b, "mul");
    const std::size_t n = a.degree();
    std::vector<cplx> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx s{};
        for (std::size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
        c[k] = s;
    }
    return TaylorPoly(std::move(c));
}

TaylorPoly div(const TaylorPoly& a, const TaylorPoly& b) {
    require_same_degree(a, b, "div");
    if (b[0] == cplx{0.0}) {
        throw Error(ErrorKind::singular_division,
                    "div: divisor has zero constant term (use div_by_z for shifts)");
    }
    const std::size_t n = a.degree();
    std::vector<cplx> q(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        cplx s = a[k];
        for (std::size_t j = 1; j <= k; ++j) s -= b[j] * q[k - j];
        q[k] = s / b[0];
    }
    return TaylorPoly(std::move(q));
}

TaylorPoly div_by_z(const TaylorPoly& a) {
    if (a[0] != cplx{0.0}) {
        throw Error(ErrorKind::singular_division, "div_by_z: constant term is not zero");
    }
    std::vector<cplx> q(a.degree() + 1);
    for (std::size_t k = 0; k < a.degree(); ++k) q[k] = a[k + 1];
    return TaylorPoly(std::move(q));
}

// b = log a  <=>  a b' = a'  =>  k a_0 b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}
TaylorPoly log_series(const TaylorPoly& a) {
    if (std::abs(a[0] - 1.0) > kAnchorTol) {
        throw Error(ErrorKind::branch_anchor, "log_series: constant term must be 1");
    }
    const std::size_t n = a.degree();
    std::vector<cplx> b(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        cplx s = static_cast<double>(k) * a[k];
        for (std::size_t j = 1; j < k; ++j) s -= static_cast<double>(j) * b[j] * a[k - j];
        b[k] = s / (static_cast<double>(k) * a[0]);
    }
    return TaylorPoly(std::move(b));
}

// b = exp a  <=>  b' = a' b  =>  k b_k = sum_{j=1}^{k} j a_j b_{k-j}
TaylorPoly exp_series(const TaylorPoly& a) {
    if (std::abs(a[0]) > kAnchorTol) {
        throw Error(ErrorKind::normalization, "exp_series: constant term must be 0");
    }
    const std::size_t n = a.degree();
    std::vector<cplx> b(n + 1);
    b[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        cplx s{};
        for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * b[k - j];
        b[k] = s / static_cast<double>(k);
    }
    return TaylorPoly(std::move(b));
}

TaylorPoly cpow(const TaylorPoly& a, cplx gamma) {
    return exp_series(log_series(a) * gamma);
}

TaylorPoly differentiate(const TaylorPoly& a) {
    std::vector<cplx> d(a.degree() + 1);
    for (std::size_t k = 0; k < a.degree(); ++k) d[k] = static_cast<double>(k + 1) * a[k + 1];
    return TaylorPoly(std::move(d));
}

TaylorPoly integrate(const TaylorPoly& a) {
    std::vector<cplx> r(a.degree() + 1);
    for (std::size_t k = 0; k < a.degree(); ++k) r[k + 1] = a[k] / static_cast<double>(k + 1);
    return TaylorPoly(std::move(r));
}

cplx evaluate(const TaylorPoly& a, cplx z) {
    cplx acc{};
    for (std::size_t k = a.degree() + 1; k-- > 0;) acc = acc * z + a[k];
    return acc;
}

bool coeffs_close(const TaylorPoly& a, const TaylorPoly& b, double tol) {
    if (a.degree() != b.degree()) return false;
    double scale = 1.0;
    for (std::size_t k = 0; k <= a.degree(); ++k) {
        scale = std::max({scale, std::abs(a[k]), std::abs(b[k])});
    }
    return max_coeff_diff(a, b) <= tol * scale;
}

double max_coeff_diff(const TaylorPoly& a, const TaylorPoly& b) {
    require_same_degree(a, b, "compare");
    double m = 0.0;
    for (std::size_t k = 0; k <= a.degree(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

nlohmann::json to_json(const TaylorPoly& a) {
    auto arr = nlohmann::json::array();
    for (const auto& c : a.coeffs()) arr.push_back({c.real(), c.imag()});
    return arr;
}

TaylorPoly taylor_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorKind::usage, "TaylorPoly JSON must be an array");
    std::vector<cplx> c;
    c.reserve(j.size());
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw Error(ErrorKind::usage, "TaylorPoly JSON entries must be [re, im] pairs");
        }
        c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return TaylorPoly(std::move(c));
}

// (1 - z)^mu = sum_k binom(mu, k) (-1)^k z^k, c_{k} = c_{k-1} (k - 1 - mu) / k
TaylorPoly binomial_series(cplx mu, std::size_t degree) {
    std::vector<cplx> c(degree + 1);
    c[0] = 1.0;
    for (std::size_t k = 1; k <= degree; ++k) {
        c[k] = c[k - 1] * (static_cast<double>(k) - 1.0 - mu) / static_cast<double>(k);
    }
    return TaylorPoly(std::move(c));
}

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::degree_mismatch: return "degree_mismatch";
        case ErrorKind::singular_division: return "singular_division";
        case ErrorKind::branch_anchor: return "branch_anchor";
        case ErrorKind::normalization: return "normalization";
        case ErrorKind::catalog: return "catalog";
        case ErrorKind::domain: return "domain";
        case ErrorKind::singular_sample: return "singular_sample";
        case ErrorKind::branch_tracking: return "branch_tracking";
        case ErrorKind::quadrature: return "quadrature";
        case ErrorKind::analysis: return "analysis";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

}  // namespace gft
