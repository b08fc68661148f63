#include <doctest.h>

#include <cmath>

#include "gft/collision.hpp"
#include "gft/transforms.hpp"

using namespace gft;

namespace {

void check_witness(const AnalyticFn& f, const CollisionWitness& w, const CollisionOptions& opts = {}) {
    CHECK(w.polished);
    CHECK(w.separation > opts.delta_sep);
    CHECK(std::abs(w.z1) < 1.0);
    CHECK(std::abs(w.z2) < 1.0);
    // recompute independently of the reported values
    const cplx a = f.f(w.z1), b = f.f(w.z2);
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
}

}  // namespace

TEST_CASE("identity has no collision") {
    const auto w = univalence_falsify(catalog_build("identity"));
    CHECK_FALSE(w.has_value());
    const auto j = to_json(w);
    CHECK(j["found"] == false);
    CHECK(j["note"].get<std::string>().find("does not establish univalence") != std::string::npos);
}

TEST_CASE("univalent catalog functions produce no collision") {
    for (const auto& f : {catalog_build("koebe_order", {{"lambda", 0.0}}), catalog_build("half_plane"),
                          catalog_build("neg_log"), catalog_build("spiral_extremal", {{"alpha", 0.5}, {"lambda", 0.0}})}) {
        CAPTURE(f.describe());
        CHECK_FALSE(univalence_falsify(f).has_value());
    }
}

TEST_CASE("Cesaro image beyond the univalence range collides") {
    const auto t = cesaro_beta(2.0, catalog_build("koebe_order", {{"lambda", 0.0}}));
    const auto w = univalence_falsify(t);
    REQUIRE(w.has_value());
    check_witness(t, *w);
    const auto j = to_json(w);
    CHECK(j["found"] == true);
    CHECK(j["confidence"] == "high");
}

TEST_CASE("spiral_extremal with lambda = -1 collides") {
    const auto g0 = catalog_build("spiral_extremal", {{"alpha", 0.0}, {"lambda", -1.0}});
    const auto w = univalence_falsify(g0);
    REQUIRE(w.has_value());
    check_witness(g0, *w);
}

TEST_CASE("royster_example is univalent but its Cesaro image at beta = 0 is not") {
    const auto f = catalog_build("royster_example");
    CHECK_FALSE(univalence_falsify(f).has_value());
    // C_0[f] = (1 - (1 - z)^i) / i
    const auto c = cesaro_beta(0.0, f);
    const auto w = univalence_falsify(c);
    REQUIRE(w.has_value());
    check_witness(c, *w);
}
