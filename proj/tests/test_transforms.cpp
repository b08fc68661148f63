#include <doctest.h>

#include <cmath>

#include "gft/analysis.hpp"
#include "gft/error.hpp"
#include "gft/transforms.hpp"
#include "oracles.hpp"

using namespace gft;

namespace {

AnalyticFn koebe(double lambda) { return catalog_build("koebe_order", {{"lambda", lambda}}); }

std::vector<AnalyticFn> sources() {
    return {
        koebe(0.0),
        koebe(0.5),
        catalog_build("half_plane"),
        catalog_build("neg_log"),
        catalog_build("convex_extremal", {{"lambda", 0.25}}),
        catalog_build("spiral_extremal", {{"alpha", 0.5}, {"lambda", 0.25}}),
        catalog_build("royster_example"),
        catalog_build("identity"),
    };
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("alexander examples") {
    const auto j = alexander(koebe(0.0));
    for (cplx z : oracle::disk_points(20, 0.9, 1)) {
        CHECK(rel(j.fn.df(z), 1.0 / ((1.0 - z) * (1.0 - z))) < 1e-13);
    }
    CHECK(std::abs(path_integral_value(j, 0.5) - 1.0) < 1e-12);
    CHECK(std::abs(j.fn.f(cplx{0.3, 0.4}) - cplx{0.3, 0.4} / (1.0 - cplx{0.3, 0.4})) < 1e-12);

    const auto ji = alexander(catalog_build("identity"));
    CHECK(std::abs(ji.fn.f(cplx{0.2, -0.7}) - cplx{0.2, -0.7}) < 1e-14);

    const auto f = koebe(0.25);
    const TaylorPoly fs = f.series_of(20), js = alexander(f).series(20);
    for (std::size_t k = 1; k <= 20; ++k) CHECK(std::abs(js[k] - fs[k] / static_cast<double>(k)) < 1e-12 * std::abs(fs[k]));
}

TEST_CASE("hornich_scale examples") {
    const auto f = catalog_build("spiral_extremal", {{"alpha", 0.5}, {"lambda", 0.25}});
    const auto one = hornich_scale(1.0, f);
    for (cplx z : oracle::disk_points(20, 0.9, 2)) {
        CHECK(rel(one.fn.df(z), f.df(z)) < 1e-12);
        CHECK(rel(one.fn.ddf(z), f.ddf(z)) < 1e-10);
    }
    CHECK(rel(one.fn.f(cplx{0.5, 0.3}), f.f(cplx{0.5, 0.3})) < 1e-11);

    const cplx g1{0.7, 0.2}, g2{-0.4, 0.9};
    const auto nested = hornich_scale(g2, hornich_scale(g1, f));
    const auto direct = hornich_scale(g1 * g2, f);
    for (cplx z : oracle::disk_points(100, 0.9, 3)) {
        CHECK(rel(nested.fn.pre_schwarzian(z), direct.fn.pre_schwarzian(z)) < 1e-10);
        CHECK(rel(nested.fn.df(z), direct.fn.df(z)) < 1e-10);
    }

    // (1 - lambda) * K lands in K(lambda)
    for (double lambda : {-0.5, 0.0, 0.5}) {
        const auto t = hornich_scale(1.0 - lambda, catalog_build("half_plane"));
        const auto rep = membership_margin(t, ClassSpec::convex(lambda), DiskGrid{0.999, 80, 240, 3});
        CHECK(rep.margin > -1e-9);
    }
}

TEST_CASE("hornich_add examples") {
    const auto f = catalog_build("royster_example");
    const auto g = catalog_build("neg_log");
    const auto fi = hornich_add(f, catalog_build("identity"));
    for (cplx z : oracle::disk_points(20, 0.9, 4)) CHECK(rel(fi.fn.df(z), f.df(z)) < 1e-14);
    CHECK(rel(fi.fn.f(cplx{-0.4, 0.6}), f.f(cplx{-0.4, 0.6})) < 1e-11);

    const cplx z0{0.3, 0.2};
    const auto fg = hornich_add(f, g);
    CHECK(rel(fg.fn.pre_schwarzian(z0), f.ddf(z0) / f.df(z0) + g.ddf(z0) / g.df(z0)) < 1e-13);

    for (double beta : {0.0, 0.5, 1.0, 2.5}) {
        for (const auto& src : {koebe(0.25), catalog_build("spiral_extremal", {{"alpha", -1.2}, {"lambda", 0.0}})}) {
            const auto lhs = hornich_add(alexander(src), hornich_scale(beta, g));
            const auto rhs = cesaro_beta(beta, src);
            for (cplx z : oracle::disk_points(100, 0.9, 5)) {
                CHECK(rel(lhs.fn.df(z), rhs.fn.df(z)) < 1e-10);
                CHECK(rel(lhs.fn.pre_schwarzian(z), rhs.fn.pre_schwarzian(z)) < 1e-10);
            }
        }
    }
}

TEST_CASE("j_gamma examples") {
    const auto f = catalog_build("spiral_extremal", {{"alpha", 1.2}, {"lambda", -0.5}});
    const auto j1 = j_gamma(1.0, f);
    const auto j = alexander(f);
    for (cplx z : oracle::disk_points(20, 0.9, 6)) CHECK(rel(j1.fn.df(z), j.fn.df(z)) < 1e-12);

    const auto j0 = j_gamma(0.0, f);
    CHECK(j0.fn.df(cplx{0.5, 0.5}) == cplx{1.0});
    CHECK(std::abs(j0.fn.f(cplx{0.5, 0.5}) - cplx{0.5, 0.5}) < 1e-15);

    const cplx gamma{0.6, -0.3};
    const auto jk = j_gamma(gamma, koebe(0.0));
    for (cplx z : oracle::disk_points(20, 0.9, 7)) {
        CHECK(rel(jk.fn.df(z), std::exp(-2.0 * gamma * std::log(1.0 - z))) < 1e-12);
    }
}

TEST_CASE("cesaro examples") {
    const auto f = catalog_build("royster_example");
    const auto c0 = cesaro_beta(0.0, f);
    const auto j = alexander(f);
    for (cplx z : oracle::disk_points(20, 0.9, 8)) CHECK(rel(c0.fn.df(z), j.fn.df(z)) < 1e-14);

    // closed form [(1 - z)^-(beta - 2 lambda + 1) - 1] / (beta - 2 lambda + 1)
    const double beta = 1.0, lambda = 0.25;
    const double e = beta - 2.0 * lambda + 1.0;
    const auto c = cesaro_beta(beta, koebe(lambda));
    const cplx want = (std::pow(1.0 - 0.7, -e) - 1.0) / e;
    CHECK(std::abs(path_integral_value(c, 0.7) - want) < 1e-10);
    for (cplx z : oracle::disk_points(20, 0.95, 9)) {
        CHECK(rel(c.fn.f(z), (std::exp(-e * std::log(1.0 - z)) - 1.0) / e) < 1e-10);
    }

    // exponent 0: logarithmic branch
    const auto cl = cesaro_beta(0.0, koebe(0.5));
    for (cplx z : oracle::disk_points(20, 0.9, 10)) CHECK(std::abs(cl.fn.f(z) + std::log(1.0 - z)) < 1e-10);

    CHECK_THROWS_AS(cesaro_beta(-0.5, f), Error);
    CHECK_NOTHROW(cesaro_beta(-0.5, f, true));

    // 1 + z C''/C' = z f'/f + beta z / (1 - z)
    const auto cb = cesaro_beta(1.5, f);
    for (cplx z : oracle::disk_points(50, 0.9, 11)) {
        const cplx lhs = 1.0 + z * cb.fn.ddf(z) / cb.fn.df(z);
        const cplx rhs = z * f.df(z) / f.f(z) + 1.5 * z / (1.0 - z);
        CHECK(rel(lhs, rhs) < 1e-9);
    }
}

TEST_CASE("path_integral_value") {
    const auto j = alexander(koebe(0.0));
    CHECK(std::abs(path_integral_value(j, 0.5) - 1.0) < 1e-12);
    try {
        path_integral_value(j, 1.0);
        FAIL("expected domain error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
    }
}

TEST_CASE("derived log-derivatives agree with ddf/df") {
    const auto src = sources();
    std::vector<TransformedFn> ts;
    for (const auto& f : src) {
        ts.push_back(alexander(f));
        ts.push_back(hornich_scale(cplx{0.5, 0.3}, f));
        ts.push_back(j_gamma(cplx{0.8, -0.2}, f));
        ts.push_back(cesaro_beta(0.75, f));
        ts.push_back(hornich_add(f, src[2]));
    }
    for (const auto& t : ts) {
        CAPTURE(t.fn.name);
        for (cplx z : oracle::disk_points(30, 0.9, 12)) {
            const cplx d = oracle::central_diff(t.fn.df, z, 1e-6);
            CHECK(rel(t.fn.ddf(z) / t.fn.df(z), d / t.fn.df(z)) < 1e-6);
        }
    }
}

TEST_CASE("normalization preservation") {
    for (const auto& f : sources()) {
        for (const auto& t : {alexander(f), hornich_scale(cplx{1.5, -0.5}, f), j_gamma(cplx{0.3, 0.3}, f),
                              cesaro_beta(2.0, f), hornich_add(f, f)}) {
            CAPTURE(t.fn.name);
            CHECK(t.fn.normalized);
            CHECK(std::abs(t.fn.f(0.0)) < 1e-15);
            CHECK(std::abs(t.fn.df(0.0) - 1.0) < 1e-15);
            CHECK(std::abs(t.fn.f(1e-13)) < 1e-12);
            CHECK(std::abs(t.fn.f(cplx{0.0, 1e-9}) / cplx{0.0, 1e-9} - 1.0) < 1e-6);
            if (t.fn.series_of) CHECK(t.series(64).is_normalized());
        }
    }
    CHECK_THROWS_AS(alexander(catalog_build("power_map", {{"mu", 2.0}})), Error);
}

TEST_CASE("operator identities at 100 points") {
    const cplx gamma{0.7, 0.4};
    for (const auto& f : sources()) {
        CAPTURE(f.describe());
        const auto jg = j_gamma(gamma, f);
        const auto ij = hornich_scale(gamma, alexander(f));
        const auto c0 = cesaro_beta(0.0, f);
        const auto j = alexander(f);
        const auto ce = cesaro_beta(1.5, f);
        const auto sum = hornich_add(j, hornich_scale(1.5, catalog_build("neg_log")));
        const auto nested = hornich_scale(0.5, hornich_scale(gamma, f));
        const auto direct = hornich_scale(0.5 * gamma, f);
        for (cplx z : oracle::disk_points(100, 0.9, 13)) {
            CHECK(rel(jg.fn.df(z), ij.fn.df(z)) < 1e-10);
            CHECK(rel(c0.fn.df(z), j.fn.df(z)) < 1e-10);
            CHECK(rel(ce.fn.df(z), sum.fn.df(z)) < 1e-10);
            CHECK(rel(nested.fn.df(z), direct.fn.df(z)) < 1e-10);
        }
        const cplx z{-0.35, 0.5};
        CHECK(rel(jg.fn.f(z), ij.fn.f(z)) < 1e-10);
        CHECK(rel(ce.fn.f(z), sum.fn.f(z)) < 1e-10);
    }
}

TEST_CASE("series and quadrature realizations agree") {
    const auto pts = oracle::disk_points(12, 0.7, 14);
    for (const auto& f : sources()) {
        std::vector<TransformedFn> ts{alexander(f), hornich_scale(cplx{0.5, 0.3}, f), j_gamma(cplx{0.8, -0.2}, f),
                                      cesaro_beta(0.5, f), cesaro_beta(1.0, f), hornich_add(f, catalog_build("neg_log"))};
        for (const auto& t : ts) {
            CAPTURE(t.fn.name);
            REQUIRE(t.fn.series_of);
            const TaylorPoly s = t.series(64);
            for (cplx z : pts) CHECK(rel(evaluate(s, z), path_integral_value(t, z)) < 1e-8);
        }
    }
}

TEST_CASE("alexander maps starlike of order lambda into convex of order lambda") {
    for (double lambda : {0.0, 0.25, 0.5}) {
        const auto j = alexander(koebe(lambda));
        const auto rep = membership_margin(j, ClassSpec::convex(lambda), DiskGrid{0.999, 80, 240, 3});
        CHECK(rep.margin > -1e-9);
    }
}

TEST_CASE("spiral log-derivative identity") {
    // f / z = [g / (z (1 - z)^beta)]^p; the relation
    // e^{ia} (z f'/f - 1) = cos a (z g'/g - 1 + beta z / (1 - z)) needs p = e^{-ia} cos a.
    const auto g = catalog_build("convex_extremal", {{"lambda", 0.25}});
    auto residual = [&](double alpha, double beta, cplx p, cplx z) {
        const Evaluator log_fz = [&](cplx w) { return p * (log_f_over_z_at(g, w) - beta * std::log(1.0 - w)); };
        // fourth-order central difference of log(f/z)
        const double h = 1e-3;
        const cplx d = (-log_fz(z + 2.0 * h) + 8.0 * log_fz(z + h) - 8.0 * log_fz(z - h) + log_fz(z - 2.0 * h)) /
                       (12.0 * h);
        const cplx lhs = std::polar(1.0, alpha) * (z * d);
        const cplx rhs = std::cos(alpha) * (z * g.df(z) / g.f(z) - 1.0 + beta * z / (1.0 - z));
        return std::abs(lhs - rhs);
    };
    for (double alpha : {-1.2, 0.0, 0.5}) {
        for (double beta : {0.0, 0.7, 2.0}) {
            CAPTURE(alpha);
            CAPTURE(beta);
            for (cplx z : oracle::disk_points(40, 0.8, 15)) {
                CHECK(residual(alpha, beta, std::polar(std::cos(alpha), -alpha), z) < 1e-9);
                // the exponent e^{ia} cos a satisfies it only at alpha = 0
                const double r = residual(alpha, beta, std::polar(std::cos(alpha), alpha), z);
                if (alpha == 0.0) CHECK(r < 1e-9);
            }
        }
    }
    CHECK(residual(0.5, 0.7, std::polar(std::cos(0.5), 0.5), cplx{0.4, 0.3}) > 1e-2);
}

TEST_CASE("parse_complex and operator ids") {
    CHECK(parse_complex("1") == cplx{1.0, 0.0});
    CHECK(parse_complex("0.5-1.5i") == cplx{0.5, -1.5});
    CHECK(parse_complex("-2i") == cplx{0.0, -2.0});
    CHECK(parse_complex("i") == cplx{0.0, 1.0});
    CHECK(parse_complex("-i") == cplx{0.0, -1.0});
    CHECK(parse_complex("1e-3+2E+1i") == cplx{1e-3, 20.0});
    CHECK(parse_complex("-1.5e2") == cplx{-150.0, 0.0});
    for (const char* bad : {"", "abc", "1+", "1+2j", "+i+i"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_complex(bad), Error);
    }
    for (auto k : {OperatorKind::alexander, OperatorKind::hornich_scale, OperatorKind::hornich_add,
                   OperatorKind::j_gamma, OperatorKind::cesaro}) {
        CHECK(parse_operator(operator_id(k)) == k);
    }
    CHECK_THROWS_AS(parse_operator("nope"), Error);
}
