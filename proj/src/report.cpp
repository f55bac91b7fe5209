#include "degenkit/report.hpp"

namespace degenkit {

namespace {
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

nlohmann::ordered_json VerdictReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity_id"] = identity_id;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params)
        p[key] = value;
    j["params"] = std::move(p);
    j["passed"] = passed;
    if (!note.empty())
        j["note"] = note;
    if (first_failure) {
        j["first_failure"] = {
            {"index", first_failure->index},
            {"lhs", first_failure->lhs},
            {"rhs", first_failure->rhs},
        };
    } else {
        j["first_failure"] = nullptr;
    }
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string VerdictReport::to_text_line() const {
    std::string out = passed ? "[PASS] " : "[FAIL] ";
    out += identity_id;
    for (const auto& [key, value] : params)
        out += " " + key + "=" + std::to_string(value);
    if (!note.empty())
        out += " [" + note + "]";
    if (first_failure)
        out += "  first mismatch at " + first_failure->index + ": lhs = " + first_failure->lhs +
               ", rhs = " + first_failure->rhs;
    return out;
}

std::string VerdictReport::csv_header() {
    return "identity_id,params,passed,first_failure_index,first_failure_lhs,first_failure_rhs,elapsed_ms";
}

std::string VerdictReport::to_csv_row() const {
    std::string params_text;
    for (const auto& [key, value] : params) {
        if (!params_text.empty())
            params_text += ' ';
        params_text += key + "=" + std::to_string(value);
    }
    std::string out = csv_escape(identity_id) + "," + csv_escape(params_text) + ",";
    out += passed ? "true" : "false";
    out += ",";
    out += first_failure ? csv_escape(first_failure->index) : "";
    out += ",";
    out += first_failure ? csv_escape(first_failure->lhs) : "";
    out += ",";
    out += first_failure ? csv_escape(first_failure->rhs) : "";
    out += "," + std::to_string(elapsed_ms);
    return out;
}

}  // namespace degenkit
