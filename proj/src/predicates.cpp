#include "gft/predicates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gft/error.hpp"

namespace gft {

bool royster_univalent(cplx mu) {
    if (mu == cplx{0.0}) throw Error(ErrorKind::domain, "royster: mu must be nonzero");
    return std::abs(mu + 1.0) <= 1.0 || std::abs(mu - 1.0) <= 1.0;
}

bool royster_segment_univalent(double lambda, double beta) {
    if (!(lambda < 1.0)) throw Error(ErrorKind::domain, "lambda must satisfy lambda < 1");
    const double mu = 2.0 * lambda - 1.0 - beta;
    if (mu == 0.0) return true;
    return royster_univalent(mu);
}

SetId parse_set_id(std::string_view id) {
    for (auto s : {SetId::A_K, SetId::A_K_lambda, SetId::A_J_spiral_alpha_lambda, SetId::A_J_S_lambda}) {
        if (id == set_id_name(s)) return s;
    }
    throw Error(ErrorKind::domain, "unknown set id '" + std::string(id) + "'");
}

const char* set_id_name(SetId id) noexcept {
    switch (id) {
        case SetId::A_K: return "A_K";
        case SetId::A_K_lambda: return "A_K_lambda";
        case SetId::A_J_spiral_alpha_lambda: return "A_J_spiral_alpha_lambda";
        case SetId::A_J_S_lambda: return "A_J_S_lambda";
    }
    return "unknown";
}

bool on_segment(cplx gamma, cplx a, cplx b) {
    const cplx d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(gamma - a) <= kCollinearTol;
    const cplx rel = (gamma - a) * std::conj(d);
    const double dist = std::abs(rel.imag()) / std::sqrt(len2);
    const double t = rel.real() / len2;
    return dist <= kCollinearTol && t >= 0.0 && t <= 1.0;
}

bool set_membership(SetId id, cplx gamma, double alpha, double lambda) {
    if (!(lambda < 1.0)) throw Error(ErrorKind::domain, "lambda must satisfy lambda < 1");
    if (!(std::abs(alpha) < std::numbers::pi / 2)) {
        throw Error(ErrorKind::domain, "alpha must lie in (-pi/2, pi/2)");
    }
    switch (id) {
        case SetId::A_K:
            return std::abs(gamma) <= 0.5 || on_segment(gamma, 0.5, 1.5);
        case SetId::A_K_lambda: {
            const double r = 1.0 / (2.0 * (1.0 - lambda));
            return std::abs(gamma) <= r || on_segment(gamma, r, 3.0 / (2.0 * (1.0 - lambda)));
        }
        case SetId::A_J_spiral_alpha_lambda: {
            const double denom = 2.0 * (1.0 - lambda) * std::cos(alpha);
            const cplx rot = std::polar(1.0, alpha);
            return std::abs(gamma) <= 1.0 / denom || on_segment(gamma, rot / denom, 3.0 * rot / denom);
        }
        case SetId::A_J_S_lambda:
            return std::abs(gamma) <= 1.0 / (2.0 * (1.0 - lambda));
    }
    throw Error(ErrorKind::domain, "unknown set id");
}

bool alexander_spiral_univalent(double alpha, double lambda) {
    return set_membership(SetId::A_J_spiral_alpha_lambda, cplx{1.0}, alpha, lambda);
}

}  // namespace gft
