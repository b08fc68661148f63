#include "gft/harness/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace gft::harness {

namespace {

std::string compact(const nlohmann::json& j) {
    if (j.is_number_float()) {
        std::ostringstream os;
        os << std::setprecision(10) << j.get<double>();
        return os.str();
    }
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

const char* outcome_name(Outcome o) noexcept {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::error: return "error";
    }
    return "error";
}

std::size_t VerificationReport::count(Outcome o) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [o](const CheckResult& c) { return c.outcome == o; }));
}

int VerificationReport::exit_code() const {
    if (count(Outcome::error)) return 3;
    if (count(Outcome::fail)) return 1;
    return 0;
}

int combined_exit_code(const std::vector<VerificationReport>& reports) {
    int code = 0;
    for (const auto& r : reports) {
        const int c = r.exit_code();
        if (c == 3) return 3;
        code = std::max(code, c);
    }
    return code;
}

nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json j{{"id", c.id},
                     {"claim", c.claim},
                     {"comparator", c.comparator},
                     {"measured", c.measured},
                     {"expected", c.expected},
                     {"tolerance", c.tolerance},
                     {"outcome", outcome_name(c.outcome)},
                     {"witness", c.witness}};
    if (!c.message.empty()) j["message"] = c.message;
    return j;
}

nlohmann::json to_json(const VerificationReport& r, bool with_runtime) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    nlohmann::json j{{"scenario", r.scenario},
                     {"description", r.description},
                     {"anchor", r.anchor},
                     {"config", r.config},
                     {"summary",
                      {{"pass", r.count(Outcome::pass)},
                       {"fail", r.count(Outcome::fail)},
                       {"error", r.count(Outcome::error)}}},
                     {"exit_code", r.exit_code()},
                     {"checks", checks},
                     {"notes", r.notes}};
    if (with_runtime) j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

std::string render_json(const std::vector<VerificationReport>& reports, bool with_runtime) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, with_runtime));
    nlohmann::json doc{{"reports", arr}, {"exit_code", combined_exit_code(reports)}};
    return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "scenario,check,outcome,comparator,measured,expected,tolerance,witness\n";
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            os << csv_field(r.scenario) << ',' << csv_field(c.id) << ',' << outcome_name(c.outcome) << ','
               << csv_field(c.comparator) << ',' << csv_field(compact(c.measured)) << ','
               << csv_field(compact(c.expected)) << ',' << std::setprecision(6) << c.tolerance << ','
               << csv_field(c.witness.dump()) << '\n';
        }
    }
    return os.str();
}

std::string render_table(const std::vector<VerificationReport>& reports, bool with_runtime) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "== " << r.scenario << ": " << r.description << '\n';
        os << "   anchor: " << r.anchor << '\n';
        std::size_t w = 5;
        for (const auto& c : r.checks) w = std::max(w, c.id.size());
        for (const auto& c : r.checks) {
            os << "   " << std::left << std::setw(6) << outcome_name(c.outcome) << std::setw(static_cast<int>(w) + 2)
               << c.id << compact(c.measured) << ' ' << c.comparator << ' ' << compact(c.expected);
            if (c.tolerance > 0.0) os << " (tol " << std::setprecision(3) << c.tolerance << ')';
            if (c.outcome != Outcome::pass) os << "  witness " << c.witness.dump();
            if (!c.message.empty()) os << "  [" << c.message << ']';
            os << '\n';
        }
        for (const auto& n : r.notes) os << "   note: " << n << '\n';
        os << "   " << r.count(Outcome::pass) << " pass, " << r.count(Outcome::fail) << " fail, "
           << r.count(Outcome::error) << " error";
        if (with_runtime) os << ", " << std::fixed << std::setprecision(2) << r.runtime_seconds << " s";
        os << std::defaultfloat << "\n\n";
    }
    return os.str();
}

}  // namespace gft::harness
