#include "gft/harness/scenario.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <sstream>

#include "gft/error.hpp"

namespace gft::harness {

namespace {

nlohmann::json number_json(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string check_id(const std::string& base, const std::vector<std::pair<std::string, double>>& params) {
    if (params.empty()) return base;
    std::string out = base + "[";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, params[i].second);
        out += params[i].first + "=" + std::string(buf, res.ptr);
    }
    return out + "]";
}

double ScenarioContext::tolerance(const std::string& id, double fallback) const {
    const auto& m = cfg_.tol_overrides;
    if (auto it = m.find(id); it != m.end()) return it->second;
    if (auto pos = id.find('['); pos != std::string::npos) {
        if (auto it = m.find(id.substr(0, pos)); it != m.end()) return it->second;
    }
    return fallback;
}

void ScenarioContext::run_check(CheckResult c, const std::function<void(CheckResult&)>& body) {
    try {
        body(c);
    } catch (const Error& e) {
        if (e.is_usage()) throw;
        c.outcome = Outcome::error;
        c.message = std::string(to_string(e.kind())) + ": " + e.what();
    }
    if (c.outcome != Outcome::pass && c.witness.is_null()) c.witness = {{"check", c.id}};
    checks_.push_back(std::move(c));
}

void ScenarioContext::check_le(const std::string& id, const std::string& claim, double bound, double tol,
                               const std::function<Measured()>& measure) {
    tol = tolerance(id, tol);
    run_check({id, claim, "<=", nullptr, bound, tol}, [&](CheckResult& c) {
        const Measured m = measure();
        c.measured = number_json(m.value);
        c.witness = m.witness;
        c.outcome = m.value <= bound + tol ? Outcome::pass : Outcome::fail;
    });
}

void ScenarioContext::check_ge(const std::string& id, const std::string& claim, double bound, double tol,
                               const std::function<Measured()>& measure) {
    tol = tolerance(id, tol);
    run_check({id, claim, ">=", nullptr, bound, tol}, [&](CheckResult& c) {
        const Measured m = measure();
        c.measured = number_json(m.value);
        c.witness = m.witness;
        c.outcome = m.value >= bound - tol ? Outcome::pass : Outcome::fail;
    });
}

void ScenarioContext::check_lt(const std::string& id, const std::string& claim, double bound,
                               const std::function<Measured()>& measure) {
    run_check({id, claim, "<", nullptr, bound, 0.0}, [&](CheckResult& c) {
        const Measured m = measure();
        c.measured = number_json(m.value);
        c.witness = m.witness;
        c.outcome = m.value < bound ? Outcome::pass : Outcome::fail;
    });
}

void ScenarioContext::check_gt(const std::string& id, const std::string& claim, double bound,
                               const std::function<Measured()>& measure) {
    run_check({id, claim, ">", nullptr, bound, 0.0}, [&](CheckResult& c) {
        const Measured m = measure();
        c.measured = number_json(m.value);
        c.witness = m.witness;
        c.outcome = m.value > bound ? Outcome::pass : Outcome::fail;
    });
}

void ScenarioContext::check_near(const std::string& id, const std::string& claim, double expected, double tol,
                                 const std::function<Measured()>& measure) {
    tol = tolerance(id, tol);
    run_check({id, claim, "~=", nullptr, expected, tol}, [&](CheckResult& c) {
        const Measured m = measure();
        c.measured = number_json(m.value);
        c.witness = m.witness;
        c.outcome = std::abs(m.value - expected) <= tol ? Outcome::pass : Outcome::fail;
    });
}

void ScenarioContext::check_is(const std::string& id, const std::string& claim, bool expected,
                               const std::function<std::pair<bool, nlohmann::json>()>& measure) {
    run_check({id, claim, "is", nullptr, expected, 0.0}, [&](CheckResult& c) {
        const auto [value, witness] = measure();
        c.measured = value;
        c.witness = witness;
        c.outcome = value == expected ? Outcome::pass : Outcome::fail;
    });
}

const Scenario& find_scenario(const std::string& id) {
    for (const auto& s : scenario_registry()) {
        if (s.id == id) return s;
    }
    throw Error(ErrorKind::usage, "unknown scenario '" + id + "' (see `gft list`)");
}

VerificationReport run_scenario(const std::string& id, const HarnessConfig& cfg) {
    cfg.validate();
    const Scenario& s = find_scenario(id);
    const auto start = std::chrono::steady_clock::now();
    ScenarioContext ctx(cfg);
    s.run(ctx);
    VerificationReport r;
    r.scenario = s.id;
    r.description = s.description;
    r.anchor = s.anchor;
    r.config = cfg.to_json();
    r.checks = ctx.take_checks();
    r.notes = ctx.take_notes();
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<VerificationReport> run_scenarios(const std::vector<std::string>& ids, const HarnessConfig& cfg) {
    std::vector<std::string> expanded;
    for (const auto& id : ids) {
        if (id == "all") {
            for (const auto& s : scenario_registry()) expanded.push_back(s.id);
        } else {
            find_scenario(id);
            expanded.push_back(id);
        }
    }
    std::vector<VerificationReport> out;
    if (!cfg.parallel) {
        for (const auto& id : expanded) out.push_back(run_scenario(id, cfg));
        return out;
    }
    std::vector<std::future<VerificationReport>> jobs;
    for (const auto& id : expanded) jobs.push_back(std::async(std::launch::async, [&cfg, id] { return run_scenario(id, cfg); }));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

nlohmann::json list_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : scenario_registry()) {
        arr.push_back({{"id", s.id}, {"description", s.description}, {"anchor", s.anchor}});
    }
    return arr;
}

std::string list_table() {
    std::size_t w = 0;
    for (const auto& s : scenario_registry()) w = std::max(w, s.id.size());
    std::ostringstream os;
    for (const auto& s : scenario_registry()) {
        os << std::left << std::setw(static_cast<int>(w) + 2) << s.id << s.description << '\n'
           << std::string(w + 2, ' ') << "anchor: " << s.anchor << '\n';
    }
    return os.str();
}

}  // namespace gft::harness
