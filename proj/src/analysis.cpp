#include "gft/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "gft/error.hpp"
#include "gft/path.hpp"

namespace gft {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::atomic<std::size_t> g_threads{0};

// Runs body(i) for i in [0, n) on contiguous chunks. Each index is written
// by exactly one worker, so callers that store per-index results stay
// deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(scan_threads(), std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w * chunk; i < std::min(n, (w + 1) * chunk); ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// Singular or failed evaluations become NaN and are counted as skipped.
template <class F>
double guarded(F&& fn) {
    try {
        const double v = fn();
        return std::isfinite(v) ? v : kNaN;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::singular_sample || e.kind() == ErrorKind::branch_tracking ||
            e.kind() == ErrorKind::quadrature || e.kind() == ErrorKind::singular_division) {
            return kNaN;
        }
        throw;
    }
}

struct ScanResult {
    double best = kNaN;
    cplx where{};
    std::size_t skipped = 0;
};

using PointObjective = std::function<double(cplx)>;

// Grid phase evaluates grid_value(j, k); refinement evaluates objective(z)
// off-grid. `sign` = +1 maximizes, -1 minimizes.
ScanResult scan(const DiskGrid& grid, const std::function<double(std::size_t, std::size_t)>& grid_value,
                const PointObjective& objective, double sign) {
    grid.validate();
    std::vector<double> vals(grid.size());
    parallel_for(grid.radii, [&](std::size_t j) {
        for (std::size_t k = 0; k < grid.angles; ++k) vals[j * grid.angles + k] = grid_value(j, k);
    });

    ScanResult res;
    std::size_t best_j = 0, best_k = 0;
    bool found = false;
    for (std::size_t j = 0; j < grid.radii; ++j) {
        for (std::size_t k = 0; k < grid.angles; ++k) {
            const double v = vals[j * grid.angles + k];
            if (std::isnan(v)) {
                ++res.skipped;
                continue;
            }
            if (!found || sign * v > sign * res.best) {
                res.best = v;
                best_j = j;
                best_k = k;
                found = true;
            }
        }
    }
    if (!found) {
        throw Error(ErrorKind::analysis, "grid scan: every sample was singular");
    }
    res.where = grid.point(best_j, best_k);

    double rc = grid.radius(best_j);
    double tc = grid.angle(best_k);
    const double r_lo = best_j > 0 ? grid.radius(best_j - 1) : 0.0;
    const double r_hi = best_j + 1 < grid.radii ? grid.radius(best_j + 1) : grid.r_max;
    double dr = std::max(rc - r_lo, r_hi - rc);
    double dt = 2.0 * std::numbers::pi / static_cast<double>(grid.angles);
    for (std::size_t round = 0; round < grid.refine; ++round) {
        double round_r = rc, round_t = tc;
        for (int a = -3; a <= 3; ++a) {
            for (int b = -3; b <= 3; ++b) {
                if (a == 0 && b == 0) continue;
                const double r = rc + a * dr / 3.0;
                if (!(r > 0.0) || r > grid.r_max) continue;
                const double t = tc + b * dt / 3.0;
                const cplx z = std::polar(r, t);
                const double v = guarded([&] { return objective(z); });
                if (!std::isnan(v) && sign * v > sign * res.best) {
                    res.best = v;
                    res.where = z;
                    round_r = r;
                    round_t = t;
                }
            }
        }
        rc = round_r;
        tc = round_t;
        dr /= 3.0;
        dt /= 3.0;
    }
    return res;
}

double norm_quantity(const AnalyticFn& f, cplx z) {
    return (1.0 - std::norm(z)) * std::abs(f.pre_schwarzian_at(z));
}

}  // namespace

std::size_t scan_threads() {
    const std::size_t n = g_threads.load();
    if (n) return n;
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_scan_threads(std::size_t n) { g_threads.store(n); }

void DiskGrid::validate() const {
    if (!(r_max > 0.0 && r_max < 1.0)) throw Error(ErrorKind::usage, "grid: rmax must lie in (0, 1)");
    if (radii == 0 || angles == 0) throw Error(ErrorKind::usage, "grid: radii and angles must be positive");
}

double DiskGrid::radius(std::size_t j) const {
    const double e = static_cast<double>(j + 1) / static_cast<double>(radii);
    return 1.0 - std::pow(1.0 - r_max, e);
}

double DiskGrid::angle(std::size_t k) const {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles);
}

cplx DiskGrid::point(std::size_t j, std::size_t k) const { return std::polar(radius(j), angle(k)); }

nlohmann::json DiskGrid::to_json() const {
    return {{"rmax", r_max}, {"radii", radii}, {"angles", angles}, {"refine", refine}};
}

NormEstimate norm_estimate(const AnalyticFn& f, const DiskGrid& grid) {
    auto obj = [&f](cplx z) { return norm_quantity(f, z); };
    const ScanResult r = scan(
        grid, [&](std::size_t j, std::size_t k) { return guarded([&] { return obj(grid.point(j, k)); }); },
        obj, +1.0);
    return {r.best, r.where, grid, r.skipped};
}

RadialLimit radial_norm_limit(const AnalyticFn& f, cplx direction) {
    if (std::abs(direction) == 0.0) throw Error(ErrorKind::domain, "radial limit: zero direction");
    const cplx u = direction / std::abs(direction);
    constexpr int k_first = 8, k_last = 24;
    RadialLimit out;
    for (int k = k_first; k <= k_last; ++k) {
        const double h = std::ldexp(1.0, -k);
        const double t = 1.0 - h;
        const double q = guarded([&] { return h * (1.0 + t) * std::abs(f.pre_schwarzian_at(t * u)); });
        if (std::isnan(q)) {
            out.divergent = true;
            break;
        }
        out.sequence.push_back(q);
        out.last_finite = q;
    }
    const auto& s = out.sequence;
    if (!out.divergent && s.size() >= 4) {
        // Sustained geometric growth under halving of 1 - t means no finite limit.
        int growing = 0;
        for (std::size_t i = s.size() - 3; i < s.size(); ++i) {
            if (s[i] > 1.4 * s[i - 1] && s[i] > 1e-12) ++growing;
        }
        if (growing == 3) out.divergent = true;
    }
    if (out.divergent) {
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    if (s.size() < 4) {
        out.value = out.last_finite;
        return out;
    }
    // Richardson on the last four terms, step ratio 2, integer powers of h.
    std::vector<double> col(s.end() - 4, s.end());
    for (int level = 1; level < 4; ++level) {
        const double f2 = std::ldexp(1.0, level);
        for (std::size_t i = col.size() - 1; i >= static_cast<std::size_t>(level); --i) {
            col[i] = col[i] + (col[i] - col[i - 1]) / (f2 - 1.0);
        }
    }
    out.value = col.back();
    return out;
}

std::string ClassSpec::describe() const {
    std::ostringstream os;
    switch (family) {
        case Family::spirallike:
            os << "spirallike(alpha=" << alpha << ", lambda=" << lambda << ")";
            break;
        case Family::convex: os << "convex(lambda=" << lambda << ")"; break;
        case Family::kaplan: os << "kaplan"; break;
    }
    return os.str();
}

KaplanWindow kaplan_min_window(const AnalyticFn& f, double r, std::size_t nodes) {
    if (nodes < 4 || nodes % 2) throw Error(ErrorKind::usage, "kaplan: node count must be even");
    const std::size_t m = nodes;
    const double h = 2.0 * std::numbers::pi / static_cast<double>(m);
    std::vector<double> g(m);
    for (std::size_t i = 0; i < m; ++i) {
        const cplx z = std::polar(r, h * static_cast<double>(i));
        g[i] = (1.0 + z * f.pre_schwarzian_at(z)).real();
        if (!std::isfinite(g[i])) {
            std::ostringstream os;
            os << "kaplan: singular sample at z = " << z;
            throw Error(ErrorKind::singular_sample, os.str());
        }
    }
    // Cumulative Simpson at even nodes over two periods.
    const std::size_t pairs = m;  // 2m intervals over [0, 4 pi]
    std::vector<double> cum(pairs + 1, 0.0);
    for (std::size_t e = 1; e <= pairs; ++e) {
        const std::size_t i0 = (2 * e - 2) % m, i1 = (2 * e - 1) % m, i2 = (2 * e) % m;
        cum[e] = cum[e - 1] + h / 3.0 * (g[i0] + 4.0 * g[i1] + g[i2]);
    }
    // min over e1 < e2 <= e1 + m/2 of cum[e2] - cum[e1]; window max via deque.
    const std::size_t span = m / 2;
    KaplanWindow best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    std::deque<std::size_t> dq;
    for (std::size_t e2 = 1; e2 <= pairs; ++e2) {
        const std::size_t e_new = e2 - 1;
        while (!dq.empty() && cum[dq.back()] <= cum[e_new]) dq.pop_back();
        dq.push_back(e_new);
        while (dq.front() + span < e2) dq.pop_front();
        const double v = cum[e2] - cum[dq.front()];
        if (v < best.integral) {
            best = {v, 2.0 * h * static_cast<double>(dq.front()), 2.0 * h * static_cast<double>(e2)};
        }
    }
    return best;
}

MembershipReport membership_margin(const AnalyticFn& f, const ClassSpec& family,
                                   const DiskGrid& grid, double tol) {
    grid.validate();
    MembershipReport rep;
    rep.family = family;
    rep.tolerance = tol;

    switch (family.family) {
        case Family::convex: {
            auto obj = [&](cplx z) { return (1.0 + z * f.pre_schwarzian_at(z)).real() - family.lambda; };
            const ScanResult r = scan(
                grid, [&](std::size_t j, std::size_t k) { return guarded([&] { return obj(grid.point(j, k)); }); },
                obj, -1.0);
            rep.margin = r.best;
            rep.witness_z = r.where;
            rep.skipped = r.skipped;
            break;
        }
        case Family::spirallike: {
            const cplx rot = std::polar(1.0, family.alpha);
            const double threshold = family.lambda * std::cos(family.alpha);
            const std::vector<cplx> values = sample_values(f, grid);
            auto from_value = [&](cplx z, cplx fz) {
                return (rot * log_derivative_pair(f, z, fz).first).real() - threshold;
            };
            auto obj = [&](cplx z) { return from_value(z, f.f(z)); };
            const ScanResult r = scan(
                grid,
                [&](std::size_t j, std::size_t k) {
                    const cplx v = values[j * grid.angles + k];
                    if (std::isnan(v.real())) return kNaN;
                    return guarded([&] { return from_value(grid.point(j, k), v); });
                },
                obj, -1.0);
            rep.margin = r.best;
            rep.witness_z = r.where;
            rep.skipped = r.skipped;
            break;
        }
        case Family::kaplan: {
            std::vector<KaplanWindow> windows(grid.radii);
            std::vector<char> ok(grid.radii, 0);
            parallel_for(grid.radii, [&](std::size_t j) {
                try {
                    windows[j] = kaplan_min_window(f, grid.radius(j));
                    ok[j] = 1;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::singular_sample) throw;
                }
            });
            bool found = false;
            for (std::size_t j = 0; j < grid.radii; ++j) {
                if (!ok[j]) {
                    ++rep.skipped;
                    continue;
                }
                const double m = windows[j].integral + std::numbers::pi;
                if (!found || m < rep.margin) {
                    rep.margin = m;
                    rep.witness_z = std::polar(grid.radius(j), windows[j].theta1);
                    rep.theta1 = windows[j].theta1;
                    rep.theta2 = windows[j].theta2;
                    found = true;
                }
            }
            if (!found) throw Error(ErrorKind::analysis, "kaplan: every radius was singular");
            break;
        }
    }
    rep.passed = rep.margin > -tol;
    return rep;
}

std::vector<cplx> sample_values(const AnalyticFn& f, const DiskGrid& grid) {
    grid.validate();
    const cplx nan{kNaN, kNaN};
    std::vector<cplx> out(grid.size(), nan);
    parallel_for(grid.angles, [&](std::size_t k) {
        cplx acc{};
        cplx prev{};
        bool broken = false;
        for (std::size_t j = 0; j < grid.radii && !broken; ++j) {
            const cplx z = grid.point(j, k);
            try {
                cplx v;
                if (f.value_by_quadrature) {
                    acc += integrate_segment(f.df, prev, z);
                    prev = z;
                    v = acc;
                } else {
                    v = f.f(z);
                }
                if (std::isfinite(v.real()) && std::isfinite(v.imag())) {
                    out[j * grid.angles + k] = v;
                } else if (f.value_by_quadrature) {
                    broken = true;
                }
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::usage || e.kind() == ErrorKind::domain) throw;
                // An accumulated ray cannot continue past a failed segment.
                if (f.value_by_quadrature) broken = true;
            }
        }
    });
    return out;
}

nlohmann::json complex_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const NormEstimate& n) {
    return {{"value", n.value}, {"argmax_z", complex_json(n.argmax_z)},
            {"grid", n.grid.to_json()}, {"skipped", n.skipped}};
}

nlohmann::json to_json(const MembershipReport& m) {
    nlohmann::json j{{"family", m.family.describe()}, {"margin", m.margin},
                     {"witness_z", complex_json(m.witness_z)}, {"tolerance", m.tolerance},
                     {"verdict", m.passed ? "pass" : "fail"}, {"skipped", m.skipped}};
    if (m.family.family == Family::kaplan) {
        j["theta1"] = m.theta1;
        j["theta2"] = m.theta2;
    }
    return j;
}

nlohmann::json to_json(const RadialLimit& r) {
    nlohmann::json j{{"divergent", r.divergent}, {"last_finite", r.last_finite}};
    if (r.divergent) {
        j["value"] = nullptr;
    } else {
        j["value"] = r.value;
    }
    return j;
}

}  // namespace gft
