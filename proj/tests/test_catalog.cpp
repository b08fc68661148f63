#include <doctest.h>

#include <cmath>

#include "gft/analysis.hpp"
#include "gft/catalog.hpp"
#include "gft/error.hpp"
#include "oracles.hpp"

using namespace gft;

namespace {

std::vector<AnalyticFn> sample_catalog() {
    return {
        catalog_build("koebe_order", {{"lambda", 0.0}}),
        catalog_build("koebe_order", {{"lambda", -0.5}}),
        catalog_build("koebe_order", {{"lambda", 0.75}}),
        catalog_build("half_plane"),
        catalog_build("neg_log"),
        catalog_build("convex_extremal", {{"lambda", 0.0}}),
        catalog_build("convex_extremal", {{"lambda", 0.5}}),
        catalog_build("convex_extremal", {{"lambda", -0.5}}),
        catalog_build("spiral_extremal", {{"alpha", 0.5}, {"lambda", 0.25}}),
        catalog_build("spiral_extremal", {{"alpha", -1.2}, {"lambda", -0.5}}),
        catalog_build("royster_example"),
        catalog_build("power_map", {{"mu", cplx{0.5, -1.0}}}),
        catalog_build("identity"),
    };
}

ErrorKind build_error(const std::string& name, const ParamMap& p) {
    try {
        catalog_build(name, p);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected gft::Error");
    return ErrorKind::usage;
}

}  // namespace

TEST_CASE("catalog examples") {
    const auto k = catalog_build("koebe_order", {{"lambda", 0.0}});
    CHECK(std::abs(k.f(0.5) - 2.0) < 1e-15);

    const auto h = catalog_build("half_plane");
    CHECK(h.df(0.0) == cplx{1.0});
    CHECK(std::abs(h.f(0.5) - 1.0) < 1e-15);

    const auto c = catalog_build("convex_extremal", {{"lambda", 0.5}});
    const auto nl = catalog_build("neg_log");
    for (cplx z : oracle::disk_points(20, 0.9, 1)) {
        CHECK(std::abs(c.f(z) + std::log(1.0 - z)) < 1e-14);
        CHECK(std::abs(c.f(z) - nl.f(z)) < 1e-14);
    }

    // near the limit the generic form stays continuous with the log branch
    const auto near = catalog_build("convex_extremal", {{"lambda", 0.5 - 1e-9}});
    CHECK(std::abs(near.f(0.5) - nl.f(0.5)) < 1e-8);
}

TEST_CASE("catalog names and errors") {
    const auto& names = catalog_names();
    for (const char* want : {"koebe_order", "half_plane", "neg_log", "convex_extremal", "spiral_extremal",
                             "royster_example", "power_map"}) {
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
    }
    CHECK(build_error("no_such_fn", {}) == ErrorKind::catalog);
    CHECK(build_error("koebe_order", {{"lambda", 1.0}}) == ErrorKind::domain);
    CHECK(build_error("spiral_extremal", {{"alpha", 1.6}}) == ErrorKind::domain);
    CHECK(build_error("power_map", {{"mu", 0.0}}) == ErrorKind::domain);
    CHECK(build_error("power_map", {}) == ErrorKind::domain);
}

TEST_CASE("normalization of normalized entries") {
    for (const auto& f : sample_catalog()) {
        if (!f.normalized) continue;
        CAPTURE(f.describe());
        CHECK(std::abs(f.f(0.0)) < 1e-15);
        CHECK(std::abs(f.df(0.0) - 1.0) < 1e-15);
    }
}

TEST_CASE("finite-difference consistency of derivatives") {
    const auto pts = oracle::disk_points(100, 0.5, 2);
    for (const auto& f : sample_catalog()) {
        CAPTURE(f.describe());
        double worst_df = 0.0, worst_ddf = 0.0;
        for (cplx z : pts) {
            worst_df = std::max(worst_df, std::abs(oracle::central_diff(f.f, z) - f.df(z)));
            worst_ddf = std::max(worst_ddf, std::abs(oracle::central_diff(f.df, z) - f.ddf(z)));
        }
        CHECK(worst_df < 1e-6);
        CHECK(worst_ddf < 1e-6);
    }
}

TEST_CASE("optional closed forms agree with generic routes") {
    const auto pts = oracle::disk_points(100, 0.9, 3);
    for (const auto& f : sample_catalog()) {
        CAPTURE(f.describe());
        for (cplx z : pts) {
            if (f.pre_schwarzian) {
                CHECK(std::abs(f.pre_schwarzian(z) - f.ddf(z) / f.df(z)) <= 1e-10 * std::max(1.0, std::abs(f.pre_schwarzian(z))));
            }
            if (f.log_df) CHECK(std::abs(std::exp(f.log_df(z)) - f.df(z)) <= 1e-10 * std::max(1.0, std::abs(f.df(z))));
            if (f.log_f_over_z) {
                const cplx q = f.f(z) / z;
                CHECK(std::abs(std::exp(f.log_f_over_z(z)) - q) <= 1e-10 * std::max(1.0, std::abs(q)));
            }
        }
    }
}

TEST_CASE("series agree with closed forms inside radius 0.7") {
    const auto pts = oracle::disk_points(200, 0.7, 4);
    for (const auto& f : sample_catalog()) {
        if (!f.series_of) continue;
        CAPTURE(f.describe());
        // (1 - z)^-(2 - 2 lambda) with lambda < 0 has a degree-64 tail above 1e-8 at |z| = 0.7
        const bool steep = f.name == "koebe_order" && f.params.at("lambda").real() < 0.0;
        const TaylorPoly s = f.series_of(steep ? 128 : 64);
        double worst = 0.0;
        for (cplx z : pts) {
            const cplx v = f.f(z);
            worst = std::max(worst, std::abs(evaluate(s, z) - v) / std::max(1.0, std::abs(v)));
        }
        CHECK(worst < 1e-8);
        if (f.normalized) CHECK(s.is_normalized());
    }
}

TEST_CASE("log_derivative_pair") {
    const auto h = catalog_build("half_plane");
    CHECK(std::abs(log_derivative_pair(h, 0.5).first - 2.0) < 1e-14);

    for (const auto& f : sample_catalog()) {
        if (!f.normalized) continue;
        CAPTURE(f.describe());
        const auto [a, b] = log_derivative_pair(f, 1e-6);
        CHECK(std::abs(a - 1.0) < 1e-4);
        CHECK(std::abs(b - 1.0) < 1e-4);
    }

    for (double lambda : {-1.0, -0.5, 0.0, 0.25, 0.75}) {
        const auto k = catalog_build("koebe_order", {{"lambda", lambda}});
        for (double t : {-0.9, -0.3, 0.2, 0.6, 0.95}) {
            const cplx q = log_derivative_pair(k, t).first;
            CHECK(std::abs(q.imag()) < 1e-12);
            CHECK(std::abs(q.real() - (1.0 + (2.0 - 2.0 * lambda) * t / (1.0 - t))) < 1e-10);
        }
    }

    const auto p = catalog_build("power_map", {{"mu", 2.0}});
    try {
        log_derivative_pair(p, 0.5);
    } catch (const Error&) {
        FAIL("unexpected error away from zeros");
    }
    CHECK_THROWS_AS(log_derivative_pair(catalog_build("half_plane"), 0.0), Error);
}

TEST_CASE("koebe_order is starlike of order lambda") {
    const DiskGrid grid{0.999, 200, 200, 3};
    for (double lambda : {-1.0, -0.5, 0.0, 0.5, 0.75}) {
        CAPTURE(lambda);
        const auto k = catalog_build("koebe_order", {{"lambda", lambda}});
        const auto rep = membership_margin(k, ClassSpec::starlike(lambda), grid);
        CHECK(rep.margin > -1e-9);
        CHECK(rep.passed);
    }
}

TEST_CASE("spiral_extremal is alpha-spirallike of order lambda") {
    const DiskGrid grid{0.999, 200, 200, 3};
    for (double alpha : {-1.2, -0.5, 0.0, 0.5, 1.2}) {
        for (double lambda : {-0.5, 0.0, 0.5}) {
            CAPTURE(alpha);
            CAPTURE(lambda);
            const auto g = catalog_build("spiral_extremal", {{"alpha", alpha}, {"lambda", lambda}});
            const auto rep = membership_margin(g, ClassSpec::spirallike(alpha, lambda), grid);
            CHECK(rep.margin > -1e-9);
        }
    }
}

TEST_CASE("expm1 is accurate for small arguments") {
    for (cplx u : {cplx{1e-9, 2e-9}, cplx{-3e-7, 1e-7}, cplx{0.3, -0.2}}) {
        const cplx ref = std::exp(u) - 1.0;
        CHECK(std::abs(expm1(u) - ref) <= 1e-15 * std::max(1.0, std::abs(ref)) + 1e-8 * std::abs(ref));
    }
    CHECK(std::abs(expm1(cplx{1e-12, 0.0}) - (1e-12 + 0.5e-24)) < 1e-27);
}
