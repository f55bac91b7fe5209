#include "degenkit/families.hpp"

#include "degenkit/degen_core.hpp"

#include <stdexcept>
#include <utility>

namespace degenkit {

PolyFamily::PolyFamily(std::vector<XPoly> polys) : polys_(std::move(polys)) {
    if (polys_.empty())
        throw std::invalid_argument("family needs at least index 0");
}

const XPoly& PolyFamily::at(int n) const {
    if (n < 0 || n > n_max())
        throw std::out_of_range("family index out of range");
    return polys_[static_cast<size_t>(n)];
}

XPoly bell_polynomial(const StirlingTriangle& second, int n) {
    std::vector<LambdaPoly> coeffs(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        coeffs[static_cast<size_t>(k)] = second.at(n, k);
    return XPoly(std::move(coeffs));
}

XPoly fubini_polynomial(const StirlingTriangle& second, int n) {
    std::vector<LambdaPoly> coeffs(static_cast<size_t>(n) + 1);
    BigInt fact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            fact *= k;
        coeffs[static_cast<size_t>(k)] = second.at(n, k).scaled(Rational(fact));
    }
    return XPoly(std::move(coeffs));
}

PolyFamily bell_family(const StirlingTriangle& second, int n_max) {
    std::vector<XPoly> polys;
    polys.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        polys.push_back(bell_polynomial(second, n));
    return PolyFamily(std::move(polys));
}

PolyFamily fubini_family(const StirlingTriangle& second, int n_max) {
    std::vector<XPoly> polys;
    polys.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        polys.push_back(fubini_polynomial(second, n));
    return PolyFamily(std::move(polys));
}

namespace {
// x * (e_L(t) - 1) as a series in t with XPoly coefficients.
TruncatedSeries<XPoly> x_times_exp_minus_one(int order) {
    auto one_seq = exp_degenerate_one_series(order);
    return TruncatedSeries<XPoly>::build(order, [&](int n) {
        if (n == 0)
            return XPoly::zero();
        return XPoly::monomial(one_seq.coefficient(n), 1);
    });
}

PolyFamily extract_scaled_by_factorials(const TruncatedSeries<XPoly>& series, int n_max) {
    std::vector<XPoly> polys;
    polys.reserve(static_cast<size_t>(n_max) + 1);
    BigInt fact = 1;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0)
            fact *= n;
        polys.push_back(series.coefficient(n).scaled(Rational(fact)));
    }
    return PolyFamily(std::move(polys));
}
}  // namespace

PolyFamily bell_family_from_egf(int n_max, int order) {
    if (order < n_max)
        throw std::invalid_argument("order must be at least n_max");
    return extract_scaled_by_factorials(x_times_exp_minus_one(order).exponential(), n_max);
}

PolyFamily fubini_family_from_ogf(int n_max, int order) {
    if (order < n_max)
        throw std::invalid_argument("order must be at least n_max");
    auto denominator = TruncatedSeries<XPoly>::unit(order) - x_times_exp_minus_one(order);
    return extract_scaled_by_factorials(denominator.geometric_inverse(), n_max);
}

}  // namespace degenkit
