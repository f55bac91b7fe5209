#pragma once

#include "degenkit/lambda_poly.hpp"
#include "degenkit/rational.hpp"
#include "degenkit/series.hpp"
#include "degenkit/x_poly.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

// Independent oracles and deterministic generators for the tests. Nothing
// here may call into the code paths being checked.
namespace testsupport {

// Set partitions of {0..n-1}, counted by enumerating every restricted-growth
// assignment: element i joins one of the open blocks or starts a new one.
inline std::int64_t count_set_partitions(int n) {
    std::int64_t count = 0;
    std::function<void(int, int)> place = [&](int i, int open_blocks) {
        if (i == n) {
            ++count;
            return;
        }
        for (int b = 0; b <= open_blocks; ++b)
            place(i + 1, b == open_blocks ? open_blocks + 1 : open_blocks);
    };
    place(0, 0);
    return count;
}

// Ordered set partitions, counted by choosing each nonempty first block and
// recursing on the rest.
inline std::int64_t count_ordered_set_partitions(int n) {
    std::function<std::int64_t(unsigned)> rec = [&](unsigned mask) -> std::int64_t {
        if (mask == 0)
            return 1;
        std::int64_t total = 0;
        for (unsigned sub = mask; sub != 0; sub = (sub - 1) & mask)
            total += rec(mask & ~sub);
        return total;
    };
    return rec((1u << n) - 1);
}

// Classical triangles built by their own recurrences over plain integers.
inline std::vector<std::vector<std::int64_t>> classical_stirling_second(int n_max) {
    std::vector<std::vector<std::int64_t>> rows(static_cast<size_t>(n_max) + 1);
    rows[0] = {1};
    for (int n = 0; n < n_max; ++n) {
        rows[static_cast<size_t>(n + 1)].assign(static_cast<size_t>(n) + 2, 0);
        for (int k = 0; k <= n + 1; ++k) {
            std::int64_t from_left = k >= 1 ? rows[static_cast<size_t>(n)][static_cast<size_t>(k - 1)] : 0;
            std::int64_t same = k <= n ? rows[static_cast<size_t>(n)][static_cast<size_t>(k)] : 0;
            rows[static_cast<size_t>(n + 1)][static_cast<size_t>(k)] = from_left + k * same;
        }
    }
    return rows;
}

inline std::vector<std::vector<std::int64_t>> classical_stirling_first_signed(int n_max) {
    std::vector<std::vector<std::int64_t>> rows(static_cast<size_t>(n_max) + 1);
    rows[0] = {1};
    for (int n = 0; n < n_max; ++n) {
        rows[static_cast<size_t>(n + 1)].assign(static_cast<size_t>(n) + 2, 0);
        for (int k = 0; k <= n + 1; ++k) {
            std::int64_t from_left = k >= 1 ? rows[static_cast<size_t>(n)][static_cast<size_t>(k - 1)] : 0;
            std::int64_t same = k <= n ? rows[static_cast<size_t>(n)][static_cast<size_t>(k)] : 0;
            rows[static_cast<size_t>(n + 1)][static_cast<size_t>(k)] = from_left - n * same;
        }
    }
    return rows;
}

inline degenkit::Rational random_rational(std::mt19937& gen) {
    std::uniform_int_distribution<std::int64_t> num(-20, 20);
    std::uniform_int_distribution<std::int64_t> den(1, 10);
    return {degenkit::BigInt(num(gen)), degenkit::BigInt(den(gen))};
}

inline degenkit::Rational random_nonzero_rational(std::mt19937& gen) {
    for (;;) {
        auto r = random_rational(gen);
        if (!r.is_zero())
            return r;
    }
}

inline degenkit::LambdaPoly random_lambda_poly(std::mt19937& gen, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(gen);
    std::vector<degenkit::Rational> coeffs(static_cast<size_t>(d) + 1);
    for (auto& c : coeffs)
        c = random_rational(gen);
    return degenkit::LambdaPoly(std::move(coeffs));
}

inline degenkit::XPoly random_x_poly(std::mt19937& gen, int max_degree = 3, int max_lambda_degree = 2) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(gen);
    std::vector<degenkit::LambdaPoly> coeffs(static_cast<size_t>(d) + 1);
    for (auto& c : coeffs)
        c = random_lambda_poly(gen, max_lambda_degree);
    return degenkit::XPoly(std::move(coeffs));
}

template <typename R, typename Maker>
degenkit::TruncatedSeries<R> random_series(std::mt19937& gen, int order, Maker make_coefficient) {
    return degenkit::TruncatedSeries<R>::build(order, [&](int) { return make_coefficient(gen); });
}

}  // namespace testsupport
