#pragma once

#include "degenkit/lambda_poly.hpp"
#include "degenkit/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace degenkit {

enum class StirlingKind { first, second };

/// Triangular array of deformed Stirling entries, 0 <= k <= n <= n_max,
/// with Q[L] values. Immutable once built; at() returns the zero
/// polynomial outside the triangle.
class StirlingTriangle {
  public:
    StirlingTriangle(StirlingKind kind, std::vector<std::vector<LambdaPoly>> rows);

    StirlingKind kind() const { return kind_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    const LambdaPoly& at(int n, int k) const;

    /// Copy with entry (n, k) shifted by an integer constant. Testing hook
    /// for the negative-control checks.
    StirlingTriangle with_entry_bumped(int n, int k, std::int64_t delta) const;

    /// "n,k,value" rows (value at a sampled L when given).
    std::string to_csv(const std::optional<Rational>& lambda_value = std::nullopt) const;

    /// {"kind", "n_max", "entries": [[rendered row 0], [rendered row 1], ...]}
    nlohmann::ordered_json to_json(const std::optional<Rational>& lambda_value = std::nullopt) const;

    friend bool operator==(const StirlingTriangle& lhs, const StirlingTriangle& rhs) = default;

  private:
    StirlingKind kind_;
    std::vector<std::vector<LambdaPoly>> rows_;
};

/// Second kind via the additive recurrence
/// S(n+1, k) = S(n, k-1) + (k - n L) S(n, k), from S(0, 0) = 1.
StirlingTriangle stirling_second_by_recurrence(int n_max);

/// Second kind extracted from (e_L(t) - 1)^k / k!; must match the
/// recurrence triangle entry for entry.
StirlingTriangle stirling_second_by_egf(int n_max);

/// First kind extracted from (log_L(1 + t))^k / k!.
StirlingTriangle stirling_first_by_egf(int n_max);

}  // namespace degenkit
