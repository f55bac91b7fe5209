#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace degenkit {

/// Location and both renderings of the first coefficient where two
/// independently computed objects differ.
struct FirstFailure {
    std::string index;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one identity check instance.
struct VerdictReport {
    std::string identity_id;
    std::vector<std::pair<std::string, std::int64_t>> params;  // insertion order is rendering order
    bool passed = false;
    /// How the statement was read when the checked form is not literal
    /// (x-cleared, single variable, finite coefficient reduction, ...).
    std::string note;
    std::optional<FirstFailure> first_failure;
    std::int64_t elapsed_ms = 0;

    nlohmann::ordered_json to_json() const;
    std::string to_text_line() const;
    std::string to_csv_row() const;

    static std::string csv_header();
};

}  // namespace degenkit
