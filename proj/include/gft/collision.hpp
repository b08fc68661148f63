#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gft/analysis.hpp"

namespace gft {

struct CollisionOptions {
    /// Raw candidate acceptance, relative to the value scale max(1, median |f|).
    double eps_value = 1e-4;
    /// Minimum separation |z1 - z2| for a pair to count.
    double delta_sep = 0.05;
    /// Newton stops once |f(z1) - f(z2)| <= newton_tol * max(1, |f(z1)|).
    double newton_tol = 1e-12;
    int max_newton_iter = 60;
    std::size_t max_candidates = 400;
};

struct CollisionWitness {
    cplx z1{};
    cplx z2{};
    cplx w1{};
    cplx w2{};
    /// |f(z1) - f(z2)|.
    double residual = 0.0;
    double separation = 0.0;
    /// false: Newton did not converge and this is a raw grid candidate.
    bool polished = false;
};

/// Searches grid samples for z1, z2 with close values and |z1 - z2| > delta,
/// then solves f(z2) = f(z1) for z2 by Newton. Returns nothing when no
/// collision is found, which proves nothing about univalence.
std::optional<CollisionWitness> univalence_falsify(const AnalyticFn& f, const DiskGrid& grid = {},
                                                   const CollisionOptions& opts = {});

nlohmann::json to_json(const std::optional<CollisionWitness>& w);

}  // namespace gft
