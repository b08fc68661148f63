#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gft/harness/config.hpp"
#include "gft/harness/report.hpp"

namespace gft::harness {

/// A measured quantity and the data needed to reproduce it.
struct Measured {
    double value = 0.0;
    nlohmann::json witness;
};

/// Collects checks for one scenario run. Each `check_*` evaluates its
/// measurement lazily so that a numerical failure becomes an errored check
/// instead of aborting the scenario. Usage errors are rethrown.
class ScenarioContext {
public:
    explicit ScenarioContext(const HarnessConfig& cfg) : cfg_(cfg) {}

    const HarnessConfig& config() const noexcept { return cfg_; }
    const DiskGrid& grid() const noexcept { return cfg_.grid; }

    /// Override for `id` (exact match first, then id without its [..] suffix),
    /// otherwise `fallback`.
    double tolerance(const std::string& id, double fallback) const;

    /// measured <= bound + tol
    void check_le(const std::string& id, const std::string& claim, double bound, double tol,
                  const std::function<Measured()>& measure);
    /// measured >= bound - tol
    void check_ge(const std::string& id, const std::string& claim, double bound, double tol,
                  const std::function<Measured()>& measure);
    /// measured < bound
    void check_lt(const std::string& id, const std::string& claim, double bound,
                  const std::function<Measured()>& measure);
    /// measured > bound
    void check_gt(const std::string& id, const std::string& claim, double bound,
                  const std::function<Measured()>& measure);
    /// |measured - expected| <= tol
    void check_near(const std::string& id, const std::string& claim, double expected, double tol,
                    const std::function<Measured()>& measure);
    /// measured boolean equals expected
    void check_is(const std::string& id, const std::string& claim, bool expected,
                  const std::function<std::pair<bool, nlohmann::json>()>& measure);

    void note(std::string text) { notes_.push_back(std::move(text)); }

    std::vector<CheckResult> take_checks() { return std::move(checks_); }
    std::vector<std::string> take_notes() { return std::move(notes_); }

private:
    void run_check(CheckResult proto, const std::function<void(CheckResult&)>& body);

    const HarnessConfig& cfg_;
    std::vector<CheckResult> checks_;
    std::vector<std::string> notes_;
};

struct Scenario {
    std::string id;
    std::string description;
    std::string anchor;
    std::function<void(ScenarioContext&)> run;
};

/// Compiled-in registry, in listing order.
const std::vector<Scenario>& scenario_registry();

/// Throws a usage error for an unknown id.
const Scenario& find_scenario(const std::string& id);

VerificationReport run_scenario(const std::string& id, const HarnessConfig& cfg);

/// "all" expands to the whole registry. Reports come back in request order
/// whether or not `cfg.parallel` is set.
std::vector<VerificationReport> run_scenarios(const std::vector<std::string>& ids, const HarnessConfig& cfg);

nlohmann::json list_json();
std::string list_table();

/// "name[key=value,...]" with values in shortest round-trip form.
std::string check_id(const std::string& base, const std::vector<std::pair<std::string, double>>& params);

}  // namespace gft::harness
