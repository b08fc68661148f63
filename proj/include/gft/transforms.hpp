#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gft/catalog.hpp"
#include "gft/path.hpp"

namespace gft {

enum class OperatorKind { alexander, hornich_scale, hornich_add, j_gamma, cesaro };

struct OperatorSpec {
    OperatorKind kind = OperatorKind::alexander;
    cplx gamma{1.0};
    double beta = 0.0;

    std::string describe() const;
};

/// CLI identifiers: alexander, hornich-scale, hornich-add, j-gamma, cesaro.
const char* operator_id(OperatorKind kind) noexcept;
OperatorKind parse_operator(std::string_view id);

/// Parses "re", "re+imi", "re-imi", "imi", "i", "-i" (exponents allowed).
cplx parse_complex(std::string_view text);

/// Result of applying one of the integral operators.
///
/// `fn` carries the closed-form derivative evaluators; its value evaluator
/// integrates `df` along [0, z]. `fn.series_of` is the coefficient-level
/// realization of the same operator.
struct TransformedFn {
    OperatorSpec op;
    std::vector<std::shared_ptr<const AnalyticFn>> sources;
    AnalyticFn fn;

    operator const AnalyticFn&() const noexcept { return fn; }
    TaylorPoly series(std::size_t degree = kDefaultDegree) const { return fn.series_of(degree); }
};

/// J[f](z) = integral of f(w)/w.
TransformedFn alexander(const AnalyticFn& f);

/// I_gamma[f](z) = integral of f'(w)^gamma, branch anchored at f'(0)^gamma = 1.
TransformedFn hornich_scale(cplx gamma, const AnalyticFn& f);

/// (f (+) g)(z) = integral of f'(w) g'(w).
TransformedFn hornich_add(const AnalyticFn& f, const AnalyticFn& g);

/// J_gamma[f](z) = integral of (f(w)/w)^gamma.
TransformedFn j_gamma(cplx gamma, const AnalyticFn& f);

/// C_beta[f](z) = integral of f(w) / (w (1 - w)^beta). Negative beta is
/// rejected unless `allow_negative_beta`.
TransformedFn cesaro_beta(double beta, const AnalyticFn& f, bool allow_negative_beta = false);

/// Dispatch on an operator spec; `g` is the second operand of hornich-add.
TransformedFn apply_operator(const OperatorSpec& op, const AnalyticFn& f,
                             const AnalyticFn* g = nullptr);

/// Value of the transform at z by adaptive Gauss-Legendre along [0, z].
cplx path_integral_value(const TransformedFn& t, cplx z, const QuadratureOptions& opts = {});

}  // namespace gft
