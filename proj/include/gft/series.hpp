#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <json.hpp>

namespace gft {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultDegree = 64;

/// Radius beyond which raw truncated series should not be trusted for values.
inline constexpr double kSeriesTrustRadius = 0.95;

/// Truncated Taylor expansion c_0 + c_1 z + ... + c_N z^N about the origin.
///
/// Always holds exactly N+1 finite coefficients. Binary operations require
/// equal degrees; there is no silent promotion.
class TaylorPoly {
public:
    explicit TaylorPoly(std::size_t degree);
    explicit TaylorPoly(std::vector<cplx> coeffs);
    TaylorPoly(std::size_t degree, std::initializer_list<cplx> leading);

    static TaylorPoly constant(std::size_t degree, cplx value);
    /// The series of z.
    static TaylorPoly identity(std::size_t degree);
    /// The series of 1 - z.
    static TaylorPoly one_minus_z(std::size_t degree);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    const cplx& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// c_0 == 0 and c_1 == 1 exactly.
    bool is_normalized() const noexcept;

    TaylorPoly operator+(const TaylorPoly& rhs) const;
    TaylorPoly operator-(const TaylorPoly& rhs) const;
    TaylorPoly operator*(cplx s) const;

    friend bool operator==(const TaylorPoly&, const TaylorPoly&) = default;

private:
    std::vector<cplx> coeffs_;
};

TaylorPoly mul(const TaylorPoly& a, const TaylorPoly& b);

/// a / b for b_0 != 0. Throws singular_division otherwise.
TaylorPoly div(const TaylorPoly& a, const TaylorPoly& b);

/// a / z for a_0 == 0: shifts indices down, top coefficient becomes 0.
TaylorPoly div_by_z(const TaylorPoly& a);

/// Principal logarithm anchored at log(1) = 0. Requires a_0 == 1.
TaylorPoly log_series(const TaylorPoly& a);

/// Requires a_0 == 0 so the result is anchored at exp(0) = 1.
TaylorPoly exp_series(const TaylorPoly& a);

/// a^gamma = exp(gamma log a), anchored at 1.
TaylorPoly cpow(const TaylorPoly& a, cplx gamma);

/// Coefficient k of the result is (k+1) a_{k+1}; the top coefficient is 0.
TaylorPoly differentiate(const TaylorPoly& a);

/// Antiderivative vanishing at 0. The top coefficient of `a` does not fit
/// in degree N and is dropped.
TaylorPoly integrate(const TaylorPoly& a);

/// Horner evaluation. No radius check; see kSeriesTrustRadius.
cplx evaluate(const TaylorPoly& a, cplx z);

/// Coefficient-wise |a_k - b_k| <= tol * max(1, largest magnitude in a, b).
bool coeffs_close(const TaylorPoly& a, const TaylorPoly& b, double tol = 1e-12);

/// Largest coefficient-wise absolute difference.
double max_coeff_diff(const TaylorPoly& a, const TaylorPoly& b);

/// JSON array of [re, im] pairs, index = power.
nlohmann::json to_json(const TaylorPoly& a);
TaylorPoly taylor_from_json(const nlohmann::json& j);

/// Generalized binomial coefficients of (1 - z)^mu up to degree N.
TaylorPoly binomial_series(cplx mu, std::size_t degree);

}  // namespace gft
