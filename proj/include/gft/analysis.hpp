#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gft/catalog.hpp"

namespace gft {

/// Deterministic polar sampling of the open unit disk.
///
/// Radii form a geometric ladder in 1 - r: r_j = 1 - (1 - r_max)^(j / n),
/// j = 1..n, so they crowd towards the boundary where the extremal
/// behaviour of the catalog functions lives. Angles are uniform.
struct DiskGrid {
    double r_max = 0.9995;
    std::size_t radii = 60;
    std::size_t angles = 720;
    /// Local 3x subdivision rounds around the extremizer.
    std::size_t refine = 3;

    void validate() const;
    double radius(std::size_t j) const;
    double angle(std::size_t k) const;
    cplx point(std::size_t j, std::size_t k) const;
    std::size_t size() const noexcept { return radii * angles; }

    nlohmann::json to_json() const;
};

/// Lower bound on sup (1 - |z|^2) |f''/f'| from grid samples.
struct NormEstimate {
    double value = 0.0;
    cplx argmax_z{};
    DiskGrid grid;
    std::size_t skipped = 0;
};

NormEstimate norm_estimate(const AnalyticFn& f, const DiskGrid& grid = {});

struct RadialLimit {
    double value = 0.0;
    bool divergent = false;
    double last_finite = 0.0;
    /// (1 - t^2)|f''/f'| at t = 1 - 2^-k for the sampled k.
    std::vector<double> sequence;
};

/// Richardson-extrapolated limit of (1 - t^2)|f''/f'(t d)| as t -> 1-,
/// sampled at t = 1 - 2^-k. `direction` is normalized internally.
RadialLimit radial_norm_limit(const AnalyticFn& f, cplx direction);

enum class Family { spirallike, convex, kaplan };

/// Names one of the membership conditions. Starlike of order lambda is
/// spirallike with alpha = 0.
struct ClassSpec {
    Family family = Family::convex;
    double alpha = 0.0;
    double lambda = 0.0;

    static ClassSpec spirallike(double alpha, double lambda) { return {Family::spirallike, alpha, lambda}; }
    static ClassSpec starlike(double lambda) { return {Family::spirallike, 0.0, lambda}; }
    static ClassSpec convex(double lambda) { return {Family::convex, 0.0, lambda}; }
    static ClassSpec kaplan() { return {Family::kaplan, 0.0, 0.0}; }

    std::string describe() const;
};

struct MembershipReport {
    ClassSpec family;
    /// Sampled infimum of the defining quantity minus its threshold.
    double margin = 0.0;
    cplx witness_z{};
    /// Arc end-points of the worst Kaplan window (kaplan only).
    double theta1 = 0.0;
    double theta2 = 0.0;
    double tolerance = 1e-9;
    bool passed = false;
    std::size_t skipped = 0;
};

inline constexpr double kMembershipTol = 1e-9;
inline constexpr std::size_t kKaplanNodes = 1440;

/// spirallike: inf Re(e^{i alpha} z f'/f) - lambda cos alpha
/// convex:     inf Re(1 + z f''/f') - lambda
/// kaplan:     inf over (r, theta1 < theta2 <= theta1 + 2 pi) of
///             integral Re(1 + z f''/f') dtheta + pi (composite Simpson)
MembershipReport membership_margin(const AnalyticFn& f, const ClassSpec& family,
                                   const DiskGrid& grid = {}, double tol = kMembershipTol);

/// Minimum over windows of the Kaplan integral at one radius, before adding pi.
struct KaplanWindow {
    double integral = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
};
KaplanWindow kaplan_min_window(const AnalyticFn& f, double r, std::size_t nodes = kKaplanNodes);

/// f on every grid point, index j * angles + k. Transforms are accumulated
/// segment by segment along each ray. Non-finite or failed samples are NaN.
std::vector<cplx> sample_values(const AnalyticFn& f, const DiskGrid& grid);

nlohmann::json to_json(const NormEstimate& n);
nlohmann::json to_json(const MembershipReport& m);
nlohmann::json to_json(const RadialLimit& r);
nlohmann::json complex_json(cplx z);

/// Worker count used by the grid scans (>= 1).
std::size_t scan_threads();
void set_scan_threads(std::size_t n);

}  // namespace gft
