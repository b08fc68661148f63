#include "gft/collision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <unordered_map>
#include <vector>

#include "gft/error.hpp"

namespace gft {

namespace {

struct Candidate {
    std::size_t i, m;
    double gap;    // |f(z_i) - f(z_m)|
    double score;  // gap relative to the local value spacing
};

struct CellKey {
    std::int64_t x, y;
    bool operator==(const CellKey&) const = default;
};

struct CellHash {
    std::size_t operator()(const CellKey& k) const noexcept {
        return std::hash<std::int64_t>()(k.x) * 1000003u ^ std::hash<std::int64_t>()(k.y);
    }
};

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

enum class Polish { found, merged, escaped, diverged };

struct PolishResult {
    Polish status = Polish::diverged;
    CollisionWitness witness{};
};

// Solves f(z2) = f(z1) for z2 by damped Newton, staying inside the disk.
// `merged`: Newton converged onto (or next to) z1 itself. `escaped`: the
// iterate was pushed past the sampled radius, so the matching point lies at
// or beyond the boundary.
PolishResult polish(const AnalyticFn& f, cplx z1, cplx z2, double r_limit, const CollisionOptions& opts) {
    try {
        const cplx w1 = f.f(z1);
        const double stop = opts.newton_tol * std::max(1.0, std::abs(w1));
        cplx w2 = f.f(z2);
        double res = std::abs(w2 - w1);
        int extra = 0;
        for (int it = 0; it < opts.max_newton_iter; ++it) {
            if (res <= stop && ++extra > 2) break;
            const cplx d = f.df(z2);
            if (!finite(d) || d == cplx{0.0}) return {};
            const cplx step = (w2 - w1) / d;
            double lam = 1.0;
            bool improved = false;
            for (int back = 0; back < 40; ++back, lam *= 0.5) {
                const cplx zn = z2 - lam * step;
                if (!(std::abs(zn) < 1.0 - 1e-9)) continue;
                const cplx wn = f.f(zn);
                if (!finite(wn)) continue;
                const double rn = std::abs(wn - w1);
                if (rn < res) {
                    z2 = zn;
                    w2 = wn;
                    res = rn;
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
        if (res > stop) return {std::abs(z2) > r_limit ? Polish::escaped : Polish::diverged, {}};
        const double sep = std::abs(z1 - z2);
        if (!(sep > opts.delta_sep)) return {Polish::merged, {}};
        return {Polish::found, CollisionWitness{z1, z2, w1, w2, res, sep, true}};
    } catch (const Error& e) {
        if (e.is_usage()) throw;
        return {};
    }
}

}  // namespace

std::optional<CollisionWitness> univalence_falsify(const AnalyticFn& f, const DiskGrid& grid,
                                                   const CollisionOptions& opts) {
    const std::vector<cplx> values = sample_values(f, grid);
    const std::size_t n = grid.size();
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(grid.angles);

    std::vector<double> spacing(n, 0.0);
    std::vector<double> mags;
    mags.reserve(n);
    std::vector<double> finite_spacing;
    finite_spacing.reserve(n);
    for (std::size_t j = 0; j < grid.radii; ++j) {
        const double r = grid.radius(j);
        const double dr = r - (j ? grid.radius(j - 1) : 0.0);
        const double h = std::max(dr, r * dtheta);
        for (std::size_t k = 0; k < grid.angles; ++k) {
            const std::size_t idx = j * grid.angles + k;
            if (!finite(values[idx])) continue;
            double s = 0.0;
            try {
                s = std::abs(f.df(grid.point(j, k))) * h;
            } catch (const Error&) {
                s = 0.0;
            }
            spacing[idx] = std::isfinite(s) ? s : 0.0;
            mags.push_back(std::abs(values[idx]));
            if (spacing[idx] > 0.0) finite_spacing.push_back(spacing[idx]);
        }
    }
    if (mags.empty()) throw Error(ErrorKind::analysis, "collision search: every sample was singular");

    const double eps_abs = opts.eps_value * std::max(1.0, median(mags));
    double cell = median(finite_spacing);
    if (!(cell > 0.0)) cell = eps_abs;

    std::unordered_map<CellKey, std::vector<std::size_t>, CellHash> buckets;
    std::vector<CellKey> key_of(n);
    std::vector<char> usable(n, 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const cplx v = values[idx];
        if (!finite(v) || std::abs(v) / cell > 1e15) continue;
        key_of[idx] = {static_cast<std::int64_t>(std::floor(v.real() / cell)),
                       static_cast<std::int64_t>(std::floor(v.imag() / cell))};
        usable[idx] = 1;
        buckets[key_of[idx]].push_back(idx);
    }

    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < n; ++i) {
        if (!usable[i]) continue;
        const double reach = std::max(eps_abs, spacing[i]);
        const std::int64_t R = std::min<std::int64_t>(3, static_cast<std::int64_t>(std::ceil(reach / cell)));
        const cplx zi = grid.point(i / grid.angles, i % grid.angles);
        for (std::int64_t dx = -R; dx <= R; ++dx) {
            for (std::int64_t dy = -R; dy <= R; ++dy) {
                auto it = buckets.find({key_of[i].x + dx, key_of[i].y + dy});
                if (it == buckets.end()) continue;
                for (std::size_t m : it->second) {
                    if (m <= i) continue;
                    const cplx zm = grid.point(m / grid.angles, m % grid.angles);
                    if (!(std::abs(zi - zm) > opts.delta_sep)) continue;
                    const double gap = std::abs(values[i] - values[m]);
                    const double local = spacing[i] + spacing[m];
                    if (gap > std::max(eps_abs, local)) continue;
                    cands.push_back({i, m, gap, gap / (local + eps_abs)});
                }
            }
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.score != b.score) return a.score < b.score;
        if (a.i != b.i) return a.i < b.i;
        return a.m < b.m;
    });
    if (cands.size() > opts.max_candidates) cands.resize(opts.max_candidates);

    // Pairs whose Newton run collapses onto the other point, or runs out to
    // the boundary, are near-coincidences where f' is small; only pairs where
    // Newton stalled inside the sampled disk both ways remain as raw candidates.
    const Candidate* raw = nullptr;
    for (const auto& c : cands) {
        const cplx zi = grid.point(c.i / grid.angles, c.i % grid.angles);
        const cplx zm = grid.point(c.m / grid.angles, c.m % grid.angles);
        const PolishResult a = polish(f, zi, zm, grid.r_max, opts);
        if (a.status == Polish::found) return a.witness;
        const PolishResult b = polish(f, zm, zi, grid.r_max, opts);
        if (b.status == Polish::found) return b.witness;
        if (a.status == Polish::diverged && b.status == Polish::diverged && c.gap <= eps_abs &&
            (!raw || c.gap < raw->gap)) {
            raw = &c;
        }
    }
    if (!raw) return std::nullopt;
    const cplx z1 = grid.point(raw->i / grid.angles, raw->i % grid.angles);
    const cplx z2 = grid.point(raw->m / grid.angles, raw->m % grid.angles);
    return CollisionWitness{z1, z2, values[raw->i], values[raw->m], raw->gap, std::abs(z1 - z2), false};
}

nlohmann::json to_json(const std::optional<CollisionWitness>& w) {
    if (!w) {
        return {{"found", false},
                {"note", "no collision found; this does not establish univalence"}};
    }
    return {{"found", true},
            {"polished", w->polished},
            {"confidence", w->polished ? "high" : "low"},
            {"z1", complex_json(w->z1)},
            {"z2", complex_json(w->z2)},
            {"f_z1", complex_json(w->w1)},
            {"f_z2", complex_json(w->w2)},
            {"residual", w->residual},
            {"separation", w->separation}};
}

}  // namespace gft
