#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gft/series.hpp"

namespace gft {

using Evaluator = std::function<cplx(cplx)>;
using SeriesGen = std::function<TaylorPoly(std::size_t)>;
using ParamMap = std::map<std::string, cplx>;

/// Evaluator bundle for an analytic function on the unit disk.
///
/// `f`, `df`, `ddf` are always set. The remaining evaluators are optional
/// closed forms; when empty, callers fall back to generic routes
/// (ddf/df for the pre-Schwarzian, analytic continuation for the logs).
struct AnalyticFn {
    std::string name;
    ParamMap params;

    Evaluator f;
    Evaluator df;
    Evaluator ddf;

    /// f''/f'.
    Evaluator pre_schwarzian;
    /// Branch of log f' continuous along radii, log f'(0) = 0.
    Evaluator log_df;
    /// Branch of log(f(z)/z) continuous along radii, value 0 at z = 0.
    Evaluator log_f_over_z;

    SeriesGen series_of;

    /// f(0) = 0 and f'(0) = 1.
    bool normalized = true;
    /// `f` is realized by path integration of `df` (transforms), so grid
    /// scans should accumulate values along rays instead of calling `f`.
    bool value_by_quadrature = false;

    cplx pre_schwarzian_at(cplx z) const;
    std::string describe() const;
};

struct CatalogSpec {
    std::string name;
    ParamMap params;
};

/// Names accepted by catalog_build, in listing order.
const std::vector<std::string>& catalog_names();

/// Builds one of the named functions:
///   koebe_order(lambda)        z / (1 - z)^(2 - 2 lambda)
///   half_plane                 z / (1 - z)
///   neg_log                    -log(1 - z)
///   convex_extremal(lambda)    ((1 - z)^-(1 - 2 lambda) - 1) / (1 - 2 lambda)
///   spiral_extremal(alpha, lambda)  z (1 - z)^(2 (lambda - 1) e^{-i alpha} cos alpha)
///   royster_example            z (1 - z)^(i - 1)
///   power_map(mu)              (1 - z)^mu   (not normalized)
///   identity                   z
/// Missing lambda/alpha default to 0; mu is required.
AnalyticFn catalog_build(const CatalogSpec& spec);
AnalyticFn catalog_build(const std::string& name, const ParamMap& params = {});

/// (z f'/f, 1 + z f''/f'). Throws singular_sample at zeros of f or f'.
std::pair<cplx, cplx> log_derivative_pair(const AnalyticFn& f, cplx z);

/// Same quantities given already-evaluated f(z).
std::pair<cplx, cplx> log_derivative_pair(const AnalyticFn& f, cplx z, cplx fz);

/// exp(u) - 1 without cancellation for small |u|.
cplx expm1(cplx u);

}  // namespace gft
