#include <cmath>
#include <numbers>
#include <random>

#include "gft/analysis.hpp"
#include "gft/collision.hpp"
#include "gft/error.hpp"
#include "gft/harness/scenario.hpp"
#include "gft/predicates.hpp"
#include "gft/transforms.hpp"

namespace gft::harness {

namespace {

using nlohmann::json;
using P = std::vector<std::pair<std::string, double>>;

constexpr double kUpperTol = 1e-6;
constexpr double kSharpTol = 0.02;
constexpr double kRadialTol = 1e-2;
constexpr double kMarginTol = kMembershipTol;
constexpr double kFormulaTol = 1e-9;
constexpr double kRatioTol = 1e-6;
constexpr double kCollisionResidual = 1e-12;
constexpr double kCollisionSeparation = 0.05;

AnalyticFn koebe(double lambda) { return catalog_build("koebe_order", {{"lambda", lambda}}); }
AnalyticFn convex_extremal(double lambda) { return catalog_build("convex_extremal", {{"lambda", lambda}}); }
AnalyticFn spiral(double alpha, double lambda) {
    return catalog_build("spiral_extremal", {{"alpha", alpha}, {"lambda", lambda}});
}

// exponent of (1 - z) in spiral_extremal(alpha, lambda)
cplx spiral_exponent(double alpha, double lambda) {
    return 2.0 * (lambda - 1.0) * std::polar(std::cos(alpha), -alpha);
}

Measured norm_of(const AnalyticFn& f, const DiskGrid& grid) {
    const auto n = norm_estimate(f, grid);
    return {n.value, {{"fn", f.describe()}, {"z", complex_json(n.argmax_z)}}};
}

Measured margin_of(const AnalyticFn& f, const ClassSpec& spec, const DiskGrid& grid) {
    const auto m = membership_margin(f, spec, grid);
    json w{{"fn", f.describe()}, {"class", spec.describe()}, {"z", complex_json(m.witness_z)}};
    if (spec.family == Family::kaplan) {
        w["theta1"] = m.theta1;
        w["theta2"] = m.theta2;
    }
    return {m.margin, w};
}

Measured radial_of(const AnalyticFn& f) {
    const auto r = radial_norm_limit(f, 1.0);
    return {r.value, {{"fn", f.describe()}, {"direction", complex_json(1.0)}, {"divergent", r.divergent}}};
}

json collision_witness(const AnalyticFn& f, const std::optional<CollisionWitness>& w) {
    return {{"fn", f.describe()}, {"collision", to_json(w)}};
}

// ----------------------------------------------------------------- norms

void norm_convex_order(ScenarioContext& ctx) {
    for (double lambda : ctx.config().sweep.lambda) {
        const auto f = convex_extremal(lambda);
        const double bound = 4.0 * (1.0 - lambda);
        const P p{{"lambda", lambda}};
        ctx.check_le(check_id("upper", p), "norm <= 4(1 - lambda)", bound, kUpperTol,
                     [&] { return norm_of(f, ctx.grid()); });
        ctx.check_ge(check_id("sharp", p), "extremal attains 4(1 - lambda)", bound, kSharpTol,
                     [&] { return norm_of(f, ctx.grid()); });
        ctx.check_near(check_id("radial", p), "radial limit at 1 equals 4(1 - lambda)", bound, kRadialTol,
                       [&] { return radial_of(f); });
    }
}

void norm_convex_scaling(ScenarioContext& ctx) {
    const auto h = catalog_build("half_plane");
    const double base = norm_estimate(h, ctx.grid()).value;
    for (double lambda : ctx.config().sweep.lambda) {
        const auto f = hornich_scale(1.0 - lambda, h);
        const P p{{"lambda", lambda}};
        ctx.check_near(check_id("scaling", p), "||I_{1-lambda}[h]|| / (1 - lambda) equals ||h||", base, kRatioTol * base,
                       [&] {
                           auto m = norm_of(f, ctx.grid());
                           m.value /= 1.0 - lambda;
                           return m;
                       });
        ctx.check_ge(check_id("member", p), "I_{1-lambda}[h] is convex of order lambda", 0.0, kMarginTol,
                     [&] { return margin_of(f, ClassSpec::convex(lambda), ctx.grid()); });
        ctx.check_le(check_id("upper", p), "norm <= 4(1 - lambda)", 4.0 * (1.0 - lambda), kUpperTol,
                     [&] { return norm_of(f, ctx.grid()); });
    }
}

void norm_alexander_spiral(ScenarioContext& ctx) {
    for (double alpha : ctx.config().sweep.alpha) {
        for (double lambda : ctx.config().sweep.lambda) {
            const auto f = alexander(spiral(alpha, lambda));
            const double bound = 4.0 * (1.0 - lambda) * std::cos(alpha);
            const P p{{"alpha", alpha}, {"lambda", lambda}};
            ctx.check_le(check_id("upper", p), "norm <= 4(1 - lambda) cos alpha", bound, kUpperTol,
                         [&] { return norm_of(f, ctx.grid()); });
            ctx.check_ge(check_id("sharp", p), "J[g] attains 4(1 - lambda) cos alpha", bound, kSharpTol,
                         [&] { return norm_of(f, ctx.grid()); });
        }
    }
}

void norm_cesaro_sharp(ScenarioContext& ctx) {
    bool literal_gap = false;
    for (double alpha : ctx.config().sweep.alpha) {
        for (double lambda : ctx.config().sweep.lambda) {
            const auto g = spiral(alpha, lambda);
            const cplx c = spiral_exponent(alpha, lambda);
            for (double beta : ctx.config().sweep.beta) {
                const auto t = cesaro_beta(beta, g);
                const P p{{"alpha", alpha}, {"lambda", lambda}, {"beta", beta}};
                // C_beta[g]' = (1 - z)^(c - beta), so the limit is 2|beta - c|
                ctx.check_near(check_id("radial", p), "radial limit at 1 equals 2|beta - c|",
                               2.0 * std::abs(beta - c), kRadialTol, [&] { return radial_of(t); });
                const double literal = 4.0 * (1.0 - lambda) * std::cos(alpha) + 2.0 * beta;
                if (alpha == 0.0 || beta == 0.0) {
                    ctx.check_near(check_id("sharp", p), "radial limit equals 4(1 - lambda) cos alpha + 2 beta",
                                   literal, kRadialTol, [&] { return radial_of(t); });
                } else if (std::abs(2.0 * std::abs(beta - c) - literal) > kRadialTol) {
                    literal_gap = true;
                }
            }
        }
    }
    if (literal_gap) {
        ctx.note("for alpha != 0 and beta > 0 the limit 4(1 - lambda) cos alpha + 2 beta is not attained: "
                 "|2(1 - lambda) cos alpha e^{-i alpha} + beta| differs from 2(1 - lambda) cos alpha + beta; "
                 "only the alpha = 0 and beta = 0 cases are checked against that value");
    }
}

// normalized catalog picks with their univalence status
struct Pick {
    AnalyticFn f;
    bool univalent;
};

Pick random_pick(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double lambda = -1.0 + 1.75 * u(rng);
    const double alpha = -1.2 + 2.4 * u(rng);
    switch (std::uniform_int_distribution<int>(0, 6)(rng)) {
        case 0: return {koebe(lambda), lambda >= 0.0};
        case 1: return {catalog_build("half_plane"), true};
        case 2: return {catalog_build("neg_log"), true};
        case 3: return {convex_extremal(lambda), lambda >= -0.5};
        case 4: return {spiral(alpha, lambda), lambda >= 0.0};
        case 5: return {catalog_build("royster_example"), true};
        default: return {catalog_build("identity"), true};
    }
}

void norm_cesaro_subordinate(ScenarioContext& ctx) {
    std::mt19937_64 rng(ctx.config().seed);
    const auto& betas = ctx.config().sweep.beta;
    for (int i = 0; i < 20; ++i) {
        const Pick pick = random_pick(rng);
        const double beta = betas[std::uniform_int_distribution<std::size_t>(0, betas.size() - 1)(rng)];
        const auto c = cesaro_beta(beta, pick.f);
        const P p{{"pick", i}, {"beta", beta}};
        double nj = NAN;
        try {
            nj = norm_estimate(alexander(pick.f), ctx.grid()).value;
        } catch (const Error& e) {
            if (e.is_usage()) throw;
        }
        ctx.check_le(check_id("subordinate", p), "||C_beta[f]|| <= ||J[f]|| + 2 beta", nj + 2.0 * beta, kUpperTol, [&] {
            if (std::isnan(nj)) throw Error(ErrorKind::analysis, "norm of J[f] unavailable for " + pick.f.describe());
            return norm_of(c, ctx.grid());
        });
        if (pick.univalent) {
            ctx.check_le(check_id("univalent", p), "||C_beta[f]|| <= 4 + 2 beta for f in S", 4.0 + 2.0 * beta, kSharpTol,
                         [&] { return norm_of(c, ctx.grid()); });
        }
    }
    // Koebe attains 4 + 2 beta in the limit
    for (double beta : betas) {
        const auto c = cesaro_beta(beta, koebe(0.0));
        ctx.check_near(check_id("koebe-radial", {{"beta", beta}}), "C_beta[k] has radial limit 4 + 2 beta",
                       4.0 + 2.0 * beta, kRadialTol, [&] { return radial_of(c); });
    }
}

// ------------------------------------------------------------ inclusions

void alexander_starlike_convex(ScenarioContext& ctx) {
    for (double lambda : ctx.config().sweep.lambda) {
        const auto f = alexander(koebe(lambda));
        ctx.check_ge(check_id("convex", {{"lambda", lambda}}), "J[k_lambda] is convex of order lambda", 0.0, kMarginTol,
                     [&] { return margin_of(f, ClassSpec::convex(lambda), ctx.grid()); });
    }
    for (double alpha : ctx.config().sweep.alpha) {
        for (double lambda : ctx.config().sweep.lambda) {
            const auto f = spiral(alpha, lambda);
            ctx.check_ge(check_id("spiral", {{"alpha", alpha}, {"lambda", lambda}}),
                         "g is alpha-spirallike of order lambda", 0.0, kMarginTol,
                         [&] { return margin_of(f, ClassSpec::spirallike(alpha, lambda), ctx.grid()); });
        }
    }
}

// gammas spread over the box [-2, 2] x [-2, 2] plus the real axis
std::vector<cplx> gamma_samples(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<cplx> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(u(rng), i % 4 == 0 ? 0.0 : u(rng));
    return out;
}

void hornich_convex_set(ScenarioContext& ctx) {
    const auto gammas = gamma_samples(ctx.config().seed, 400);
    for (double lambda : ctx.config().sweep.lambda) {
        // I_gamma[convex_extremal(lambda)]' = (1 - z)^(-2 gamma (1 - lambda))
        std::size_t inside = 0, bad = 0;
        json witness;
        for (cplx g : gammas) {
            if (!set_membership(SetId::A_K_lambda, g, 0.0, lambda)) continue;
            ++inside;
            const cplx mu = 1.0 - 2.0 * g * (1.0 - lambda);
            if (std::abs(mu) > 0.0 && !royster_univalent(mu) && !bad++) {
                witness = {{"gamma", complex_json(g)}, {"mu", complex_json(mu)}};
            }
        }
        const P p{{"lambda", lambda}};
        ctx.check_le(check_id("inside-univalent", p), "gamma in A(K(lambda)) gives univalent I_gamma[f]", 0.0, 0.0,
                     [&] { return Measured{static_cast<double>(bad), witness.is_null() ? json{{"inside", inside}} : witness}; });
        const double r = 1.0 / (2.0 * (1.0 - lambda));
        const cplx off{0.0, 1.01 * r};
        ctx.check_is(check_id("outside-disk", p), "gamma off the set beyond the disk gives a non-univalent map", false, [&] {
            const cplx mu = 1.0 - 2.0 * off * (1.0 - lambda);
            return std::pair{royster_univalent(mu), json{{"gamma", complex_json(off)}, {"mu", complex_json(mu)}}};
        });
        const cplx past = 3.0 * r * (1.0 + 1e-6);
        ctx.check_is(check_id("past-segment", p), "real gamma past the segment gives a non-univalent map", false, [&] {
            const cplx mu = 1.0 - 2.0 * past * (1.0 - lambda);
            return std::pair{royster_univalent(mu), json{{"gamma", complex_json(past)}, {"mu", complex_json(mu)}}};
        });
    }
}

void alexander_spiral_univalence(ScenarioContext& ctx) {
    for (double alpha : ctx.config().sweep.alpha) {
        for (double lambda : ctx.config().sweep.lambda) {
            if (!alexander_spiral_univalent(alpha, lambda)) continue;
            // J[g] = ((1 - z)^(c + 1) - 1) / -(c + 1)
            const cplx mu = spiral_exponent(alpha, lambda) + 1.0;
            ctx.check_is(check_id("extremal-univalent", {{"alpha", alpha}, {"lambda", lambda}}),
                         "1 in A(J(S*_alpha(lambda))) makes J[g] univalent", true, [&] {
                             const bool u = std::abs(mu) == 0.0 || royster_univalent(mu);
                             return std::pair{u, json{{"mu", complex_json(mu)}}};
                         });
        }
    }
    ctx.note("the condition is read as cos alpha <= 1/(2(1 - lambda)), the value for which 1 lies in the "
             "disk of radius 1/(2(1 - lambda) cos alpha); the reading cos alpha <= (1 - lambda)/2 is not used");
}

void cesaro_close_to_convex(ScenarioContext& ctx) {
    for (double lambda : ctx.config().sweep.lambda) {
        for (double beta : ctx.config().sweep.beta) {
            if (beta > 2.0 * lambda + 1.0) continue;
            const auto c = cesaro_beta(beta, koebe(lambda));
            const P p{{"lambda", lambda}, {"beta", beta}};
            ctx.check_ge(check_id("kaplan", p), "C_beta[k_lambda] is close-to-convex for beta <= 2 lambda + 1", 0.0,
                         kMarginTol, [&] { return margin_of(c, ClassSpec::kaplan(), ctx.grid()); });
        }
    }
}

void cesaro_nonunivalent(ScenarioContext& ctx) {
    for (double lambda : ctx.config().sweep.lambda) {
        for (double beta : ctx.config().sweep.beta) {
            if (beta <= 2.0 * lambda + 1.0) continue;
            ctx.check_is(check_id("royster", {{"lambda", lambda}, {"beta", beta}}),
                         "(1 - z)^(2 lambda - 1 - beta) is not univalent for beta > 2 lambda + 1", false, [&] {
                             return std::pair{royster_segment_univalent(lambda, beta),
                                              json{{"mu", 2.0 * lambda - 1.0 - beta}}};
                         });
        }
    }
    const auto c = cesaro_beta(2.0, koebe(0.0));
    ctx.check_is("collision[lambda=0,beta=2]", "C_2[k] takes some value twice", true, [&] {
        const auto w = univalence_falsify(c, ctx.grid());
        const bool ok = w && w->polished && w->residual < kCollisionResidual && w->separation > kCollisionSeparation;
        return std::pair{ok, collision_witness(c, w)};
    });
}

void cesaro_starlike_order(ScenarioContext& ctx) {
    for (double lambda : ctx.config().sweep.lambda) {
        for (double beta : ctx.config().sweep.beta) {
            if (beta > 2.0 * lambda) continue;
            const auto c = cesaro_beta(beta, koebe(lambda));
            const P p{{"lambda", lambda}, {"beta", beta}};
            ctx.check_ge(check_id("convex-order", p), "C_beta[k_lambda] is convex of order lambda - beta/2", 0.0,
                         kMarginTol, [&] { return margin_of(c, ClassSpec::convex(lambda - beta / 2.0), ctx.grid()); });
            ctx.check_ge(check_id("starlike", p), "C_beta[k_lambda] is starlike for beta <= 2 lambda", 0.0, kMarginTol,
                         [&] { return margin_of(c, ClassSpec::starlike(0.0), ctx.grid()); });
        }
    }
}

void cesaro_starlike_failure(ScenarioContext& ctx) {
    for (double lambda : ctx.config().sweep.lambda) {
        const double beta = 2.0 * lambda + 0.5;
        if (beta < 0.0) continue;
        const auto c = cesaro_beta(beta, koebe(lambda));
        ctx.check_lt(check_id("starlike-margin", {{"lambda", lambda}, {"beta", beta}}),
                     "Re(z C'/C) < 0 somewhere for beta = 2 lambda + 1/2", 0.0,
                     [&] { return margin_of(c, ClassSpec::starlike(0.0), ctx.grid()); });
    }
}

void cesaro_convex_order(ScenarioContext& ctx) {
    const AnalyticFn sources[] = {catalog_build("half_plane"), catalog_build("neg_log")};
    for (const auto& f : sources) {
        for (double beta : ctx.config().sweep.beta) {
            if (beta > 1.0) continue;
            const auto c = cesaro_beta(beta, f);
            ctx.check_ge(check_id("convex-" + f.name, {{"beta", beta}}), "C_beta(K) is convex of order (1 - beta)/2", 0.0,
                         kMarginTol, [&] { return margin_of(c, ClassSpec::convex((1.0 - beta) / 2.0), ctx.grid()); });
        }
    }
}

void cesaro_convexity_failure(ScenarioContext& ctx) {
    const auto h = catalog_build("half_plane");
    for (double beta : ctx.config().sweep.beta) {
        if (beta <= 1.0) continue;
        const auto c = cesaro_beta(beta, h);
        for (int n : {2, 3, 5, 10}) {
            const double x = -1.0 + 1.0 / n;
            const double expected = (n * (1.0 - beta) + beta) / (2.0 * n - 1.0);
            ctx.check_near(check_id("formula", {{"beta", beta}, {"n", n}}), "Re(1 + zC''/C') at -1 + 1/n", expected,
                           kFormulaTol, [&] {
                               const cplx z = x;
                               const double v = (1.0 + z * c.fn.pre_schwarzian_at(z)).real();
                               return Measured{v, {{"fn", c.fn.describe()}, {"z", complex_json(z)}}};
                           });
        }
        ctx.check_lt(check_id("convex-margin", {{"beta", beta}}), "C_beta[h] is not convex for beta > 1", 0.0,
                     [&] { return margin_of(c, ClassSpec::convex(0.0), ctx.grid()); });
    }
}

void cesaro_cc_preservation(ScenarioContext& ctx) {
    const AnalyticFn sources[] = {koebe(0.0), catalog_build("half_plane"), catalog_build("neg_log"),
                                  convex_extremal(-0.5)};
    for (const auto& f : sources) {
        for (double beta : ctx.config().sweep.beta) {
            if (beta > 1.0) continue;
            const auto c = cesaro_beta(beta, f);
            ctx.check_ge(check_id("kaplan-" + f.name, {{"beta", beta}}), "C_beta(C) is close-to-convex for 0 <= beta <= 1",
                         0.0, kMarginTol, [&] { return margin_of(c, ClassSpec::kaplan(), ctx.grid()); });
        }
    }
}

void royster_nonunivalent(ScenarioContext& ctx) {
    for (double beta : ctx.config().sweep.beta) {
        const cplx mu{-beta, 1.0};
        ctx.check_is(check_id("royster", {{"beta", beta}}), "(1 - z)^(i - beta) is univalent only for beta = 1",
                     beta == 1.0, [&] { return std::pair{royster_univalent(mu), json{{"mu", complex_json(mu)}}}; });
    }
    const auto f = catalog_build("royster_example");
    ctx.check_is("source-no-collision", "z(1 - z)^(i - 1) is univalent (no collision found)", false, [&] {
        const auto w = univalence_falsify(f, ctx.grid());
        return std::pair{w.has_value(), collision_witness(f, w)};
    });
    const auto c = cesaro_beta(0.0, f);
    ctx.check_is("collision[beta=0]", "C_0[z(1 - z)^(i - 1)] takes some value twice", true, [&] {
        const auto w = univalence_falsify(c, ctx.grid());
        const bool ok = w && w->polished && w->residual < kCollisionResidual && w->separation > kCollisionSeparation;
        return std::pair{ok, collision_witness(c, w)};
    });
}

// ------------------------------------------------------------------- sets

void set_predicates(ScenarioContext& ctx) {
    const auto probe = [&](const std::string& id, SetId set, double lambda, cplx g, bool expected) {
        ctx.check_is(id, std::string(set_id_name(set)) + " boundary probe", expected, [&] {
            return std::pair{set_membership(set, g, 0.0, lambda), json{{"gamma", complex_json(g)}, {"lambda", lambda}}};
        });
    };
    probe("A_K[gamma=0.5]", SetId::A_K, 0.0, 0.5, true);
    probe("A_K[gamma=1.5]", SetId::A_K, 0.0, 1.5, true);
    probe("A_K[gamma=1.5+1e-9]", SetId::A_K, 0.0, 1.5 + 1e-9, false);
    probe("A_K_lambda[lambda=-0.5,gamma=1/3]", SetId::A_K_lambda, -0.5, 1.0 / 3.0, true);
    probe("A_K_lambda[lambda=-0.5,gamma=1]", SetId::A_K_lambda, -0.5, 1.0, true);
    probe("A_K_lambda[lambda=-0.5,gamma=1+1e-9]", SetId::A_K_lambda, -0.5, 1.0 + 1e-9, false);

    std::mt19937_64 rng(ctx.config().seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::size_t mismatches = 0;
    json witness;
    for (int i = 0; i < 500; ++i) {
        // a quarter of the draws land on the real axis where the segment lives
        const cplx g{u(rng), i % 4 == 0 ? 0.0 : u(rng)};
        if (set_membership(SetId::A_K_lambda, g, 0.0, 0.0) != set_membership(SetId::A_K, g) && !mismatches++) {
            witness = {{"gamma", complex_json(g)}};
        }
    }
    ctx.check_le("A_K_lambda-at-0-equals-A_K", "A(K(0)) = A(K) on 500 random gammas", 0.0, 0.0,
                 [&] { return Measured{static_cast<double>(mismatches), witness}; });

    for (double alpha : ctx.config().sweep.alpha) {
        for (double lambda : ctx.config().sweep.lambda) {
            const double denom = 2.0 * (1.0 - lambda) * std::cos(alpha);
            const cplx dir = std::polar(1.0, alpha);
            const P p{{"alpha", alpha}, {"lambda", lambda}};
            ctx.check_is(check_id("spiral-segment-end", p), "segment end 3 e^{i alpha} / (2(1 - lambda) cos alpha) is in the set", true, [&] {
                const cplx g = 3.0 * dir / denom;
                return std::pair{set_membership(SetId::A_J_spiral_alpha_lambda, g, alpha, lambda),
                                 json{{"gamma", complex_json(g)}}};
            });
            ctx.check_is(check_id("spiral-past-end", p), "(3 + 1e-9) e^{i alpha} / (2(1 - lambda) cos alpha) is outside", false, [&] {
                const cplx g = (3.0 + 1e-9) * dir / denom;
                return std::pair{set_membership(SetId::A_J_spiral_alpha_lambda, g, alpha, lambda),
                                 json{{"gamma", complex_json(g)}}};
            });
        }
    }
}

void lambda_negative_remark(ScenarioContext& ctx) {
    const auto j = alexander(spiral(0.0, -0.25));
    ctx.check_gt("norm[lambda=-0.25]", "||J[g_0]|| exceeds 4 for lambda = -1/4", 4.5,
                 [&] { return norm_of(j, ctx.grid()); });
    const auto g = spiral(0.0, -1.0);
    ctx.check_is("collision[lambda=-1]", "g_0 is not univalent for lambda = -1", true, [&] {
        const auto w = univalence_falsify(g, ctx.grid());
        return std::pair{w.has_value(), collision_witness(g, w)};
    });
}

}  // namespace

const std::vector<Scenario>& scenario_registry() {
    static const std::vector<Scenario> registry{
        {"norm-convex-order", "pre-Schwarzian norm of convex functions of order lambda",
         "||f|| <= 4(1 - lambda) for f in K(lambda), and the bound is sharp", norm_convex_order},
        {"norm-convex-scaling", "K(lambda) as the Hornich multiple (1 - lambda) * K",
         "f in K(lambda) iff f = I_{1-lambda}[g] with g in K", norm_convex_scaling},
        {"norm-alexander-spiral", "norm of Alexander images of spirallike functions",
         "||f|| <= 4(1 - lambda) cos alpha for f in J(S*_alpha(lambda)), sharp", norm_alexander_spiral},
        {"norm-cesaro-sharp", "radial norm limit of beta-Cesaro images of spirallike extremals",
         "lim_{t -> 1-} (1 + t)[2(1 - lambda) cos alpha + beta]", norm_cesaro_sharp},
        {"norm-cesaro-subordinate", "Cesaro norm bounded by the Alexander norm",
         "||C_beta[f]|| <= ||J[f]|| + 2 beta; ||f|| <= 4 + 2 beta for f in C_beta(S)", norm_cesaro_subordinate},
        {"alexander-starlike-convex", "Alexander transform of starlike functions of order lambda",
         "J(S*(lambda)) is contained in K(lambda)", alexander_starlike_convex},
        {"hornich-convex-set", "Hornich multiples of convex functions of order lambda",
         "A(K(lambda)) = {|gamma| <= 1/(2(1 - lambda))} u [1/(2(1 - lambda)), 3/(2(1 - lambda))]",
         hornich_convex_set},
        {"alexander-spiral-univalence", "univalence of Alexander images of spirallike functions",
         "J(S*_alpha(lambda)) is contained in S precisely for cos alpha <= 1/(2(1 - lambda))",
         alexander_spiral_univalence},
        {"cesaro-close-to-convex", "beta-Cesaro images of Koebe-type functions are close-to-convex",
         "C_beta[f] in C, a subset of S, for beta <= 2 lambda + 1", cesaro_close_to_convex},
        {"cesaro-nonunivalent", "beta-Cesaro images of Koebe-type functions beyond the range",
         "C_beta of the Koebe function does not lie in the class S", cesaro_nonunivalent},
        {"cesaro-starlike-order", "beta-Cesaro images of starlike functions of order lambda",
         "C_beta(S*(lambda)) is contained in K(lambda - beta/2) and in S* for 0 <= beta <= 2 lambda",
         cesaro_starlike_order},
        {"cesaro-starlike-failure", "starlikeness fails just past beta = 2 lambda",
         "Re(z_0 C_beta[f]'(z_0) / C_beta[f](z_0)) < 0", cesaro_starlike_failure},
        {"cesaro-convex-order", "beta-Cesaro images of convex functions",
         "C_beta(K) is contained in K((1 - beta)/2)", cesaro_convex_order},
        {"cesaro-convexity-failure", "beta-Cesaro image of z/(1 - z) is not convex for beta > 1",
         "Re(1 + z_n C''/C') = (n(1 - beta) + beta)/(2n - 1) < 0 at z_n = -1 + 1/n", cesaro_convexity_failure},
        {"cesaro-cc-preservation", "beta-Cesaro transform preserves close-to-convexity",
         "C_beta(C) is contained in C for 0 <= beta <= 1", cesaro_cc_preservation},
        {"royster-nonunivalent", "a univalent function whose beta-Cesaro images are not univalent",
         "(1 - z)^{i - beta} is not univalent in D for beta != 1", royster_nonunivalent},
        {"set-predicates", "exact membership of the Hornich parameter sets",
         "A(K(-1/2)) = {|gamma| <= 1/3} u [1/3, 1]", set_predicates},
        {"lambda-negative-remark", "spirallike extremal for negative order",
         "we conclude that g_0 is not in S", lambda_negative_remark},
    };
    return registry;
}

}  // namespace gft::harness
