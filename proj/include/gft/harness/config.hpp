#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gft/analysis.hpp"

namespace gft::harness {

enum class OutputFormat { table, json, csv };

struct Sweep {
    std::vector<double> lambda{-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75};
    std::vector<double> alpha{0.0, 0.5, -0.5, 1.2, -1.2};
    std::vector<double> beta{0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
};

struct HarnessConfig {
    DiskGrid grid;
    std::size_t degree = kDefaultDegree;
    std::uint64_t seed = 20240601;
    bool parallel = false;
    OutputFormat format = OutputFormat::table;
    /// check id (full, or without the [..] parameter suffix) -> tolerance
    std::map<std::string, double> tol_overrides;
    Sweep sweep;

    void validate() const;
    /// Echoed into reports. Output format is not part of it.
    nlohmann::json to_json() const;
};

/// Merges a config document into `cfg`. Keys mirror the CLI flags:
/// degree, rmax, radii, angles, refine, seed, parallel, json, csv,
/// tol-overrides (file path or inline object), lambdas, alphas, betas.
/// Unknown keys and malformed values raise a usage error.
void apply_config_json(HarnessConfig& cfg, const nlohmann::json& doc);

/// Reads the file named by GFT_CONFIG, if set.
void apply_env_config(HarnessConfig& cfg);

std::map<std::string, double> load_tol_overrides(const std::string& path);

/// Parses "a,b,c" into doubles.
std::vector<double> parse_list(const std::string& text);

}  // namespace gft::harness
