#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gft::harness {

enum class Outcome { pass, fail, error };

const char* outcome_name(Outcome o) noexcept;

struct CheckResult {
    /// Unique within a scenario; sweep parameters go in a [..] suffix.
    std::string id;
    std::string claim;
    /// One of <=, >=, <, >, ~=, is.
    std::string comparator;
    nlohmann::json measured;
    nlohmann::json expected;
    double tolerance = 0.0;
    Outcome outcome = Outcome::fail;
    /// Point, pair, or parameter set that reproduces the measurement.
    nlohmann::json witness;
    std::string message;
};

struct VerificationReport {
    std::string scenario;
    std::string description;
    /// Source statement the scenario reproduces.
    std::string anchor;
    nlohmann::json config;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    double runtime_seconds = 0.0;

    std::size_t count(Outcome o) const;
    /// 0 all pass, 1 a check failed, 3 a check errored.
    int exit_code() const;
};

int combined_exit_code(const std::vector<VerificationReport>& reports);

nlohmann::json to_json(const CheckResult& c);
/// `with_runtime = false` gives the byte-stable form.
nlohmann::json to_json(const VerificationReport& r, bool with_runtime = true);

std::string render_json(const std::vector<VerificationReport>& reports, bool with_runtime = true);
std::string render_csv(const std::vector<VerificationReport>& reports);
std::string render_table(const std::vector<VerificationReport>& reports, bool with_runtime = true);

}  // namespace gft::harness
