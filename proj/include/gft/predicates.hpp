#pragma once

#include <string_view>

#include "gft/series.hpp"

namespace gft {

/// Univalence of (1 - z)^mu on the disk: mu != 0 in |mu + 1| <= 1 or
/// |mu - 1| <= 1. Throws domain for mu = 0.
bool royster_univalent(cplx mu);

/// Univalence of (1 - z)^(2 lambda - 1 - beta), i.e. of the beta-Cesaro image
/// of koebe_order(lambda). The degenerate exponent 0 is the logarithmic
/// limit, which is univalent. Equivalent to 2 lambda - 3 <= beta <= 2 lambda + 1.
bool royster_segment_univalent(double lambda, double beta);

/// Parameter sets of gamma for which I_gamma maps a family into univalent maps.
enum class SetId {
    /// {|g| <= 1/2} u [1/2, 3/2]
    A_K,
    /// {|g| <= 1/(2(1-l))} u [1/(2(1-l)), 3/(2(1-l))]
    A_K_lambda,
    /// {|g| <= 1/(2(1-l)cos a)} u [e^{ia}/(2(1-l)cos a), 3e^{ia}/(2(1-l)cos a)]
    A_J_spiral_alpha_lambda,
    /// {|g| <= 1/(2(1-l))}
    A_J_S_lambda,
};

SetId parse_set_id(std::string_view id);
const char* set_id_name(SetId id) noexcept;

inline constexpr double kCollinearTol = 1e-12;

/// gamma on the closed segment [a, b]: distance to the line <= kCollinearTol
/// and projection parameter in [0, 1] (end-points included).
bool on_segment(cplx gamma, cplx a, cplx b);

/// Exact membership predicate. alpha and lambda are ignored where the set
/// does not depend on them. Throws domain for lambda >= 1 or |alpha| >= pi/2.
bool set_membership(SetId id, cplx gamma, double alpha = 0.0, double lambda = 0.0);

/// Whether 1 lies in the A(J(S*_alpha(lambda))) set, i.e. whether the
/// Alexander transform maps alpha-spirallike functions of order lambda
/// into univalent ones.
bool alexander_spiral_univalent(double alpha, double lambda);

}  // namespace gft
