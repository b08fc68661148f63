#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gft/analysis.hpp"
#include "gft/collision.hpp"
#include "gft/error.hpp"
#include "gft/harness/config.hpp"
#include "gft/harness/scenario.hpp"
#include "gft/transforms.hpp"

namespace {

using gft::cplx;
using nlohmann::json;
namespace h = gft::harness;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEngine = 3;

// Flags shared by every verb. Only flags actually given override the config.
struct GlobalFlags {
    std::optional<std::size_t> degree;
    std::optional<double> rmax;
    std::optional<std::size_t> radii;
    std::optional<std::size_t> angles;
    std::optional<std::size_t> refine;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> tol_overrides;
    std::optional<std::string> lambdas;
    std::optional<std::string> alphas;
    std::optional<std::string> betas;
    bool json = false;
    bool csv = false;
    bool parallel = false;
};

struct FnFlags {
    std::string fn = "koebe_order";
    std::optional<double> lambda;
    std::optional<double> alpha;
    std::optional<std::string> mu;
    std::optional<std::string> op;
    std::string gamma = "1";
    double beta = 0.0;
    std::string fn2 = "koebe_order";
    std::optional<double> lambda2;
    std::optional<double> alpha2;
    std::optional<std::string> mu2;
};

void add_global_flags(CLI::App& app, GlobalFlags& g) {
    app.add_option("--degree", g.degree, "Taylor truncation degree");
    app.add_option("--rmax", g.rmax, "outermost grid radius, < 1");
    app.add_option("--radii", g.radii, "number of grid radii");
    app.add_option("--angles", g.angles, "number of grid angles");
    app.add_option("--refine", g.refine, "local refinement rounds");
    app.add_option("--seed", g.seed, "seed for random-sample checks");
    app.add_option("--tol-overrides", g.tol_overrides, "JSON file mapping check id to tolerance");
    app.add_option("--lambdas", g.lambdas, "lambda sweep, comma separated");
    app.add_option("--alphas", g.alphas, "alpha sweep, comma separated");
    app.add_option("--betas", g.betas, "beta sweep, comma separated");
    app.add_flag("--json", g.json, "emit a single JSON document");
    app.add_flag("--csv", g.csv, "emit CSV rows");
    app.add_flag("--parallel", g.parallel, "run scenarios concurrently");
}

void add_fn_flags(CLI::App& cmd, FnFlags& f) {
    cmd.add_option("--fn", f.fn, "catalog function")->capture_default_str();
    cmd.add_option("--lambda", f.lambda, "order lambda");
    cmd.add_option("--alpha", f.alpha, "spiral angle alpha");
    cmd.add_option("--mu", f.mu, "power_map exponent (complex)");
    cmd.add_option("--op", f.op, "alexander, hornich-scale, hornich-add, j-gamma, cesaro");
    cmd.add_option("--gamma", f.gamma, "gamma for hornich-scale and j-gamma (complex)")->capture_default_str();
    cmd.add_option("--beta", f.beta, "beta for cesaro")->capture_default_str();
    cmd.add_option("--fn2", f.fn2, "second operand of hornich-add")->capture_default_str();
    cmd.add_option("--lambda2", f.lambda2, "lambda of the second operand");
    cmd.add_option("--alpha2", f.alpha2, "alpha of the second operand");
    cmd.add_option("--mu2", f.mu2, "mu of the second operand");
}

h::HarnessConfig resolve_config(const GlobalFlags& g) {
    h::HarnessConfig cfg;
    h::apply_env_config(cfg);
    json doc = json::object();
    if (g.degree) doc["degree"] = *g.degree;
    if (g.rmax) doc["rmax"] = *g.rmax;
    if (g.radii) doc["radii"] = *g.radii;
    if (g.angles) doc["angles"] = *g.angles;
    if (g.refine) doc["refine"] = *g.refine;
    if (g.seed) doc["seed"] = *g.seed;
    if (g.tol_overrides) doc["tol-overrides"] = *g.tol_overrides;
    if (g.lambdas) doc["lambdas"] = *g.lambdas;
    if (g.alphas) doc["alphas"] = *g.alphas;
    if (g.betas) doc["betas"] = *g.betas;
    if (g.json) doc["json"] = true;
    if (g.csv) doc["csv"] = true;
    if (g.parallel) doc["parallel"] = true;
    h::apply_config_json(cfg, doc);
    cfg.validate();
    return cfg;
}

gft::AnalyticFn build_fn(const std::string& name, const std::optional<double>& lambda,
                         const std::optional<double>& alpha, const std::optional<std::string>& mu) {
    gft::ParamMap p;
    if (lambda) p["lambda"] = *lambda;
    if (alpha) p["alpha"] = *alpha;
    if (mu) p["mu"] = gft::parse_complex(*mu);
    return gft::catalog_build(name, p);
}

struct Target {
    gft::AnalyticFn fn;
    std::string label;
};

Target build_target(const FnFlags& f) {
    const auto base = build_fn(f.fn, f.lambda, f.alpha, f.mu);
    if (!f.op) return {base, base.describe()};
    gft::OperatorSpec spec;
    spec.kind = gft::parse_operator(*f.op);
    spec.gamma = gft::parse_complex(f.gamma);
    spec.beta = f.beta;
    std::optional<gft::AnalyticFn> second;
    if (spec.kind == gft::OperatorKind::hornich_add) second = build_fn(f.fn2, f.lambda2, f.alpha2, f.mu2);
    auto t = gft::apply_operator(spec, base, second ? &*second : nullptr);
    return {t.fn, t.fn.describe()};
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::vector<cplx> parse_points(const std::string& text) {
    std::vector<cplx> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(gft::parse_complex(item));
    if (out.empty()) throw gft::Error(gft::ErrorKind::usage, "--at needs at least one point");
    return out;
}

int cmd_transform(const h::HarnessConfig& cfg, const FnFlags& f, const std::optional<std::string>& at) {
    const Target t = build_target(f);
    if (!t.fn.series_of) throw gft::Error(gft::ErrorKind::usage, "no series realization for " + t.label);
    const gft::TaylorPoly s = t.fn.series_of(cfg.degree);
    std::vector<std::pair<cplx, cplx>> values;
    if (at) {
        for (cplx z : parse_points(*at)) {
            if (!(std::abs(z) < 1.0)) throw gft::Error(gft::ErrorKind::usage, "--at points must lie in the unit disk");
            values.emplace_back(z, t.fn.f(z));
        }
    }
    if (cfg.format == h::OutputFormat::json) {
        json doc{{"fn", t.label}, {"degree", cfg.degree}, {"coefficients", gft::to_json(s)}};
        if (at) {
            json vs = json::array();
            for (auto [z, v] : values) vs.push_back({{"z", gft::complex_json(z)}, {"value", gft::complex_json(v)}});
            doc["values"] = vs;
        }
        std::cout << doc.dump(2) << '\n';
    } else if (cfg.format == h::OutputFormat::csv) {
        std::cout << "kind,index_or_z_re,z_im,re,im\n";
        for (std::size_t k = 0; k <= s.degree(); ++k) {
            std::cout << "coeff," << k << ",," << fmt(s[k].real()) << ',' << fmt(s[k].imag()) << '\n';
        }
        for (auto [z, v] : values) {
            std::cout << "value," << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(v.real()) << ','
                      << fmt(v.imag()) << '\n';
        }
    } else {
        std::cout << t.label << ", degree " << cfg.degree << '\n';
        for (std::size_t k = 0; k <= s.degree(); ++k) {
            std::cout << std::setw(4) << k << "  " << fmt(s[k].real()) << "  " << fmt(s[k].imag()) << '\n';
        }
        for (auto [z, v] : values) std::cout << "f(" << fmt(z.real()) << ", " << fmt(z.imag()) << ") = " << v << '\n';
    }
    return kExitPass;
}

int cmd_norm(const h::HarnessConfig& cfg, const FnFlags& f, const std::string& direction) {
    const Target t = build_target(f);
    const auto n = gft::norm_estimate(t.fn, cfg.grid);
    const auto r = gft::radial_norm_limit(t.fn, gft::parse_complex(direction));
    if (cfg.format == h::OutputFormat::json) {
        std::cout << json{{"fn", t.label}, {"estimate", gft::to_json(n)}, {"radial", gft::to_json(r)}}.dump(2) << '\n';
    } else if (cfg.format == h::OutputFormat::csv) {
        std::cout << "fn,estimate,argmax_re,argmax_im,radial_limit,divergent\n"
                  << '"' << t.label << "\"," << fmt(n.value) << ',' << fmt(n.argmax_z.real()) << ','
                  << fmt(n.argmax_z.imag()) << ',' << fmt(r.value) << ',' << (r.divergent ? "true" : "false") << '\n';
    } else {
        std::cout << t.label << '\n'
                  << "  norm estimate  " << fmt(n.value) << " at " << n.argmax_z << '\n'
                  << "  radial limit   " << fmt(r.value) << (r.divergent ? " (divergent)" : "") << '\n';
    }
    return kExitPass;
}

gft::ClassSpec class_spec(const std::string& family, double order, double alpha) {
    if (family == "spirallike") return gft::ClassSpec::spirallike(alpha, order);
    if (family == "starlike") return gft::ClassSpec::starlike(order);
    if (family == "convex") return gft::ClassSpec::convex(order);
    if (family == "kaplan") return gft::ClassSpec::kaplan();
    throw gft::Error(gft::ErrorKind::usage, "unknown family '" + family + "'");
}

int cmd_check(const h::HarnessConfig& cfg, const FnFlags& f, const gft::ClassSpec& spec) {
    const Target t = build_target(f);
    const auto m = gft::membership_margin(t.fn, spec, cfg.grid);
    if (cfg.format == h::OutputFormat::json) {
        std::cout << json{{"fn", t.label}, {"membership", gft::to_json(m)}}.dump(2) << '\n';
    } else if (cfg.format == h::OutputFormat::csv) {
        std::cout << "fn,class,margin,witness_re,witness_im,verdict\n"
                  << '"' << t.label << "\",\"" << spec.describe() << "\"," << fmt(m.margin) << ','
                  << fmt(m.witness_z.real()) << ',' << fmt(m.witness_z.imag()) << ',' << (m.passed ? "pass" : "fail")
                  << '\n';
    } else {
        std::cout << t.label << " in " << spec.describe() << ": " << (m.passed ? "pass" : "fail") << '\n'
                  << "  margin " << fmt(m.margin) << " at " << m.witness_z << '\n';
    }
    return m.passed ? kExitPass : kExitFail;
}

int cmd_falsify(const h::HarnessConfig& cfg, const FnFlags& f) {
    const Target t = build_target(f);
    const auto w = gft::univalence_falsify(t.fn, cfg.grid);
    if (cfg.format == h::OutputFormat::json) {
        std::cout << json{{"fn", t.label}, {"collision", gft::to_json(w)}}.dump(2) << '\n';
    } else if (cfg.format == h::OutputFormat::csv) {
        std::cout << "fn,found,z1_re,z1_im,z2_re,z2_im,residual,separation,polished\n" << '"' << t.label << "\",";
        if (w) {
            std::cout << "true," << fmt(w->z1.real()) << ',' << fmt(w->z1.imag()) << ',' << fmt(w->z2.real()) << ','
                      << fmt(w->z2.imag()) << ',' << fmt(w->residual) << ',' << fmt(w->separation) << ','
                      << (w->polished ? "true" : "false") << '\n';
        } else {
            std::cout << "false,,,,,,,\n";
        }
    } else if (w) {
        std::cout << t.label << ": collision f(" << w->z1 << ") = f(" << w->z2 << ")\n"
                  << "  residual " << fmt(w->residual) << ", separation " << fmt(w->separation)
                  << (w->polished ? "" : ", unpolished grid candidate") << '\n';
    } else {
        std::cout << t.label << ": no collision found (not a proof of univalence)\n";
    }
    return w ? kExitFail : kExitPass;
}

int cmd_verify(const h::HarnessConfig& cfg, const std::vector<std::string>& ids) {
    const auto reports = h::run_scenarios(ids, cfg);
    switch (cfg.format) {
        case h::OutputFormat::json: std::cout << h::render_json(reports); break;
        case h::OutputFormat::csv: std::cout << h::render_csv(reports); break;
        case h::OutputFormat::table: std::cout << h::render_table(reports); break;
    }
    return h::combined_exit_code(reports);
}

int cmd_list(const h::HarnessConfig& cfg) {
    if (cfg.format == h::OutputFormat::json) {
        std::cout << h::list_json().dump(2) << '\n';
    } else if (cfg.format == h::OutputFormat::csv) {
        std::cout << "id,description,anchor\n";
        for (const auto& s : h::scenario_registry()) {
            std::cout << s.id << ",\"" << s.description << "\",\"" << s.anchor << "\"\n";
        }
    } else {
        std::cout << h::list_table();
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks for integral transforms of univalent functions"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalFlags g;
    add_global_flags(app, g);

    std::vector<std::string> ids;
    auto* verify = app.add_subcommand("verify", "run scenarios and report each check");
    verify->add_option("ids", ids, "scenario ids, or all")->required();

    auto* list = app.add_subcommand("list", "list registered scenarios");

    FnFlags tf;
    std::optional<std::string> at;
    auto* transform = app.add_subcommand("transform", "Taylor coefficients of a catalog function or its transform");
    add_fn_flags(*transform, tf);
    transform->add_option("--at", at, "comma-separated points for path-integral values");

    FnFlags nf;
    std::string direction = "1";
    auto* norm = app.add_subcommand("norm", "pre-Schwarzian norm estimate and radial limit");
    add_fn_flags(*norm, nf);
    norm->add_option("--direction", direction, "radial direction (complex)")->capture_default_str();

    FnFlags cf;
    std::string family = "starlike";
    double order = 0.0;
    double spiral_alpha = 0.0;
    auto* check = app.add_subcommand("check", "membership margin for a class");
    add_fn_flags(*check, cf);
    check->add_option("--family", family, "spirallike, starlike, convex, kaplan")->capture_default_str();
    check->add_option("--order", order, "class order lambda")->capture_default_str();
    check->add_option("--spiral-alpha", spiral_alpha, "alpha for spirallike")->capture_default_str();

    FnFlags ff;
    auto* falsify = app.add_subcommand("falsify", "search for a univalence collision");
    add_fn_flags(*falsify, ff);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        const h::HarnessConfig cfg = resolve_config(g);
        if (*verify) return cmd_verify(cfg, ids);
        if (*list) return cmd_list(cfg);
        if (*transform) return cmd_transform(cfg, tf, at);
        if (*norm) return cmd_norm(cfg, nf, direction);
        if (*check) return cmd_check(cfg, cf, class_spec(family, order, spiral_alpha));
        if (*falsify) return cmd_falsify(cfg, ff);
    } catch (const gft::Error& e) {
        std::cerr << "gft: " << e.what() << '\n';
        return e.is_usage() ? kExitUsage : kExitEngine;
    } catch (const json::exception& e) {
        std::cerr << "gft: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
