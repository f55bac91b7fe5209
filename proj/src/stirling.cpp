#include "degenkit/stirling.hpp"

#include "degenkit/degen_core.hpp"
#include "degenkit/series.hpp"

#include <stdexcept>
#include <utility>

namespace degenkit {

namespace {
const LambdaPoly kZero{};

// Entries of row k of the EGF family: n! * [t^n] base^k / k!.
StirlingTriangle triangle_from_egf(StirlingKind kind, const TruncatedSeries<LambdaPoly>& base, int n_max) {
    std::vector<std::vector<LambdaPoly>> rows(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        rows[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);

    TruncatedSeries<LambdaPoly> power = TruncatedSeries<LambdaPoly>::unit(n_max);
    BigInt k_fact = 1;
    std::vector<BigInt> n_fact(static_cast<size_t>(n_max) + 1);
    n_fact[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        n_fact[static_cast<size_t>(n)] = n_fact[static_cast<size_t>(n - 1)] * n;

    for (int k = 0; k <= n_max; ++k) {
        if (k > 0) {
            power = power * base;
            k_fact *= k;
        }
        for (int n = k; n <= n_max; ++n)
            rows[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                power.coefficient(n).scaled(Rational(n_fact[static_cast<size_t>(n)], k_fact));
    }
    return {kind, std::move(rows)};
}
}  // namespace

StirlingTriangle::StirlingTriangle(StirlingKind kind, std::vector<std::vector<LambdaPoly>> rows)
    : kind_(kind), rows_(std::move(rows)) {
    if (rows_.empty())
        throw std::invalid_argument("triangle needs at least row 0");
    for (size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1)
            throw std::invalid_argument("row length must be n + 1");
}

const LambdaPoly& StirlingTriangle::at(int n, int k) const {
    if (n < 0 || n > n_max())
        throw std::out_of_range("triangle row out of range");
    if (k < 0 || k > n)
        return kZero;
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

StirlingTriangle StirlingTriangle::with_entry_bumped(int n, int k, std::int64_t delta) const {
    if (n < 0 || n > n_max() || k < 0 || k > n)
        throw std::out_of_range("triangle entry out of range");
    StirlingTriangle out = *this;
    out.rows_[static_cast<size_t>(n)][static_cast<size_t>(k)] += LambdaPoly(Rational(delta));
    return out;
}

std::string StirlingTriangle::to_csv(const std::optional<Rational>& lambda_value) const {
    std::string out = "n,k,value\n";
    for (int n = 0; n <= n_max(); ++n) {
        for (int k = 0; k <= n; ++k) {
            const LambdaPoly& v = at(n, k);
            out += std::to_string(n) + "," + std::to_string(k) + ",";
            out += lambda_value ? v.eval(*lambda_value).to_string() : v.to_string();
            out += "\n";
        }
    }
    return out;
}

nlohmann::ordered_json StirlingTriangle::to_json(const std::optional<Rational>& lambda_value) const {
    nlohmann::ordered_json j;
    j["kind"] = kind_ == StirlingKind::first ? "first" : "second";
    j["n_max"] = n_max();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int n = 0; n <= n_max(); ++n) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 0; k <= n; ++k) {
            const LambdaPoly& v = at(n, k);
            row.push_back(lambda_value ? v.eval(*lambda_value).to_string() : v.to_string());
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

StirlingTriangle stirling_second_by_recurrence(int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    std::vector<std::vector<LambdaPoly>> rows(static_cast<size_t>(n_max) + 1);
    rows[0] = {LambdaPoly::one()};
    for (int n = 0; n < n_max; ++n) {
        auto& next = rows[static_cast<size_t>(n + 1)];
        next.resize(static_cast<size_t>(n) + 2);
        const auto& prev = rows[static_cast<size_t>(n)];
        for (int k = 0; k <= n + 1; ++k) {
            LambdaPoly entry;
            if (k >= 1 && k - 1 <= n)
                entry = prev[static_cast<size_t>(k - 1)];
            if (k <= n) {
                LambdaPoly weight = LambdaPoly(Rational(k)) - LambdaPoly::monomial(Rational(n), 1);
                entry += weight * prev[static_cast<size_t>(k)];
            }
            next[static_cast<size_t>(k)] = std::move(entry);
        }
    }
    return {StirlingKind::second, std::move(rows)};
}

StirlingTriangle stirling_second_by_egf(int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    auto base = exp_degenerate_one_series(n_max) - TruncatedSeries<LambdaPoly>::unit(n_max);
    return triangle_from_egf(StirlingKind::second, base, n_max);
}

StirlingTriangle stirling_first_by_egf(int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    return triangle_from_egf(StirlingKind::first, log_degenerate_series(n_max), n_max);
}

}  // namespace degenkit
