#pragma once

#include <array>

#include "gft/catalog.hpp"

namespace gft {

struct QuadratureOptions {
    /// Relative agreement required between a panel and its two halves.
    double rtol = 1e-11;
    /// Maximum bisection depth per panel.
    int max_depth = 24;
};

/// 16-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre16 {
    std::array<double, 16> nodes;
    std::array<double, 16> weights;
};
const GaussLegendre16& gauss_legendre16();

/// Integral of `integrand` along the straight segment [a, b] with adaptive
/// bisection. Throws quadrature on non-convergence or non-finite values.
cplx integrate_segment(const Evaluator& integrand, cplx a, cplx b,
                       const QuadratureOptions& opts = {});

inline cplx integrate_from_origin(const Evaluator& integrand, cplx z,
                                  const QuadratureOptions& opts = {}) {
    return integrate_segment(integrand, cplx{0.0}, z, opts);
}

/// Logarithm of g continued analytically along [0, z] from log g(0) = 0.
/// Requires g(0) = 1. Samples the segment and unwraps the argument,
/// subdividing any step whose phase change exceeds pi/4. Throws
/// branch_tracking if g vanishes (or nearly so) on the path.
cplx continued_log(const Evaluator& g, cplx z, int initial_steps = 32);

/// log f'(z) on the branch anchored at log f'(0) = 0.
cplx log_df_at(const AnalyticFn& f, cplx z);

/// log(f(z)/z) on the branch anchored at 0 (f normalized).
cplx log_f_over_z_at(const AnalyticFn& f, cplx z);

}  // namespace gft
