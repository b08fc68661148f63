#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gft/error.hpp"
#include "gft/predicates.hpp"

using namespace gft;

TEST_CASE("royster_univalent") {
    CHECK(royster_univalent(cplx{-1.0, 1.0}));
    CHECK_FALSE(royster_univalent(cplx{-3.0, 1.0}));
    CHECK(royster_univalent(1.0));
    CHECK(royster_univalent(2.0));
    CHECK(royster_univalent(-2.0));
    CHECK_FALSE(royster_univalent(2.0 + 1e-9));
    CHECK_FALSE(royster_univalent(cplx{0.0, 0.5}));
    try {
        royster_univalent(0.0);
        FAIL("expected domain error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
    }
}

TEST_CASE("royster_segment_univalent") {
    CHECK(royster_segment_univalent(0.0, 1.0));
    CHECK_FALSE(royster_segment_univalent(0.0, 1.5));
    CHECK(royster_segment_univalent(0.5, 2.0));
    CHECK(royster_segment_univalent(0.25, -0.5));  // mu = 0, logarithmic limit
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-3.0, 0.99);
    std::uniform_real_distribution<double> b(-6.0, 6.0);
    for (int i = 0; i < 500; ++i) {
        const double lambda = u(rng), beta = b(rng);
        CHECK(royster_segment_univalent(lambda, beta) == (2.0 * lambda - 3.0 <= beta && beta <= 2.0 * lambda + 1.0));
    }
    CHECK_THROWS_AS(royster_segment_univalent(1.0, 0.0), Error);
}

TEST_CASE("set_membership examples") {
    CHECK(set_membership(SetId::A_K, 1.4));
    CHECK(set_membership(SetId::A_K_lambda, 0.9, 0.0, -0.5));
    CHECK_FALSE(set_membership(SetId::A_J_S_lambda, 0.6, 0.0, 0.0));
    CHECK(set_membership(SetId::A_K, 1.5));
    CHECK_FALSE(set_membership(SetId::A_K, 1.5 + 1e-9));
    CHECK(set_membership(SetId::A_K, cplx{0.0, 0.5}));
    CHECK_FALSE(set_membership(SetId::A_K, cplx{1.0, 1e-9}));
    CHECK(set_membership(SetId::A_K, cplx{1.0, 1e-13}));
}

TEST_CASE("A_K_lambda at lambda = 0 equals A_K") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::bernoulli_distribution on_axis(0.3);
    for (int i = 0; i < 500; ++i) {
        const cplx g{u(rng), on_axis(rng) ? 0.0 : u(rng)};
        CHECK(set_membership(SetId::A_K_lambda, g, 0.0, 0.0) == set_membership(SetId::A_K, g));
    }
}

TEST_CASE("spiral set geometry") {
    const double alpha = 0.6, lambda = 0.2;
    const double d = 2.0 * (1.0 - lambda) * std::cos(alpha);
    const cplx rot = std::polar(1.0, alpha);
    CHECK(set_membership(SetId::A_J_spiral_alpha_lambda, 2.0 * rot / d, alpha, lambda));
    CHECK(set_membership(SetId::A_J_spiral_alpha_lambda, 3.0 * rot / d, alpha, lambda));
    CHECK_FALSE(set_membership(SetId::A_J_spiral_alpha_lambda, 3.01 * rot / d, alpha, lambda));
    CHECK_FALSE(set_membership(SetId::A_J_spiral_alpha_lambda, 2.0 * std::conj(rot) / d, alpha, lambda));
    // alpha = 0 reduces to A_K_lambda
    std::mt19937_64 rng(57);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const cplx g{u(rng), i % 3 ? u(rng) : 0.0};
        CHECK(set_membership(SetId::A_J_spiral_alpha_lambda, g, 0.0, lambda) ==
              set_membership(SetId::A_K_lambda, g, 0.0, lambda));
    }
}

TEST_CASE("alexander_spiral_univalent") {
    // 1 lies in the set iff cos a <= 1/(2(1 - l)) or 1 on the segment
    for (double lambda : {-1.0, 0.0, 0.25, 0.5, 0.75}) {
        for (double alpha : {-1.4, -1.0, -0.5, 0.0, 0.5, 1.0, 1.4}) {
            const double c = std::cos(alpha);
            const bool disk = c <= 1.0 / (2.0 * (1.0 - lambda)) + 1e-15;
            const bool seg = alpha == 0.0 && 1.0 / (2.0 * (1.0 - lambda)) <= 1.0 && 1.0 <= 3.0 / (2.0 * (1.0 - lambda));
            CHECK(alexander_spiral_univalent(alpha, lambda) == (disk || seg));
        }
    }
}

TEST_CASE("set ids and validation") {
    for (auto id : {SetId::A_K, SetId::A_K_lambda, SetId::A_J_spiral_alpha_lambda, SetId::A_J_S_lambda}) {
        CHECK(parse_set_id(set_id_name(id)) == id);
    }
    CHECK_THROWS_AS(parse_set_id("A_X"), Error);
    CHECK_THROWS_AS(set_membership(SetId::A_K, 0.1, 0.0, 1.0), Error);
    CHECK_THROWS_AS(set_membership(SetId::A_K, 0.1, std::numbers::pi / 2, 0.0), Error);
    CHECK(on_segment(0.5, 0.5, 1.5));
    CHECK(on_segment(1.5, 0.5, 1.5));
    CHECK_FALSE(on_segment(0.49, 0.5, 1.5));
}
