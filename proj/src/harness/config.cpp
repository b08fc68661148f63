#include "gft/harness/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gft/error.hpp"

namespace gft::harness {

namespace {

Error usage(const std::string& msg) { return Error(ErrorKind::usage, "config: " + msg); }

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw usage("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::map<std::string, double> overrides_from(const nlohmann::json& j) {
    if (!j.is_object()) throw usage("tol-overrides must map check ids to numbers");
    std::map<std::string, double> out;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_number()) throw usage("tolerance for '" + k + "' is not a number");
        const double t = v.get<double>();
        if (!(t >= 0.0)) throw usage("tolerance for '" + k + "' must be >= 0");
        out[k] = t;
    }
    return out;
}

std::vector<double> number_list(const nlohmann::json& v, const std::string& key) {
    if (v.is_string()) return parse_list(v.get<std::string>());
    if (!v.is_array() || v.empty()) throw usage("'" + key + "' must be a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) throw usage("'" + key + "' must contain numbers only");
        out.push_back(x.get<double>());
    }
    return out;
}

template <class T>
T get_as(const nlohmann::json& v, const std::string& key) {
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw usage("bad value for '" + key + "'");
    }
}

}  // namespace

void HarnessConfig::validate() const {
    grid.validate();
    if (degree < 1) throw usage("degree must be >= 1");
    if (sweep.lambda.empty() || sweep.alpha.empty() || sweep.beta.empty()) {
        throw usage("sweep lists must be non-empty");
    }
}

nlohmann::json HarnessConfig::to_json() const {
    return {{"grid", grid.to_json()},
            {"degree", degree},
            {"seed", seed},
            {"sweep", {{"lambda", sweep.lambda}, {"alpha", sweep.alpha}, {"beta", sweep.beta}}},
            {"tol_overrides", tol_overrides}};
}

void apply_config_json(HarnessConfig& cfg, const nlohmann::json& doc) {
    if (!doc.is_object()) throw usage("top level must be an object");
    for (const auto& [key, v] : doc.items()) {
        if (key == "degree") {
            const auto d = get_as<long long>(v, key);
            if (d < 1) throw usage("degree must be >= 1");
            cfg.degree = static_cast<std::size_t>(d);
        } else if (key == "rmax") {
            cfg.grid.r_max = get_as<double>(v, key);
        } else if (key == "radii") {
            cfg.grid.radii = get_as<std::size_t>(v, key);
        } else if (key == "angles") {
            cfg.grid.angles = get_as<std::size_t>(v, key);
        } else if (key == "refine") {
            cfg.grid.refine = get_as<std::size_t>(v, key);
        } else if (key == "seed") {
            cfg.seed = get_as<std::uint64_t>(v, key);
        } else if (key == "parallel") {
            cfg.parallel = get_as<bool>(v, key);
        } else if (key == "json") {
            if (get_as<bool>(v, key)) cfg.format = OutputFormat::json;
        } else if (key == "csv") {
            if (get_as<bool>(v, key)) cfg.format = OutputFormat::csv;
        } else if (key == "tol-overrides") {
            cfg.tol_overrides = v.is_string() ? load_tol_overrides(v.get<std::string>()) : overrides_from(v);
        } else if (key == "lambdas") {
            cfg.sweep.lambda = number_list(v, key);
        } else if (key == "alphas") {
            cfg.sweep.alpha = number_list(v, key);
        } else if (key == "betas") {
            cfg.sweep.beta = number_list(v, key);
        } else {
            throw usage("unknown key '" + key + "'");
        }
    }
    cfg.validate();
}

void apply_env_config(HarnessConfig& cfg) {
    const char* path = std::getenv("GFT_CONFIG");
    if (!path || !*path) return;
    apply_config_json(cfg, read_json_file(path));
}

std::map<std::string, double> load_tol_overrides(const std::string& path) {
    return overrides_from(read_json_file(path));
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw usage("bad number '" + item + "' in list '" + text + "'");
        }
        while (used < item.size() && item[used] == ' ') ++used;
        if (used != item.size()) throw usage("bad number '" + item + "' in list '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw usage("empty list");
    return out;
}

}  // namespace gft::harness
