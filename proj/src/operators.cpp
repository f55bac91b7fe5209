#include "degenkit/operators.hpp"

#include "degenkit/degen_core.hpp"
#include "degenkit/families.hpp"

#include <stdexcept>

namespace degenkit {

XPoly apply_euler_degenerate(const XPoly& f, int p) {
    if (p < 0)
        throw std::invalid_argument("operator order must be nonnegative");
    std::vector<LambdaPoly> out(static_cast<size_t>(f.degree() + 1));
    for (int n = 0; n <= f.degree(); ++n)
        out[static_cast<size_t>(n)] = f.coeff(n) * falling_factorial(Rational(n), p);
    return XPoly(std::move(out));
}

TruncatedSeries<LambdaPoly> apply_euler_degenerate(const TruncatedSeries<LambdaPoly>& f, int p) {
    if (p < 0)
        throw std::invalid_argument("operator order must be nonnegative");
    return TruncatedSeries<LambdaPoly>::build(
               f.order(), [&](int n) { return f.coefficient(n) * falling_factorial(Rational(n), p); })
        .restricted_to(f.valid_order());
}

XPoly apply_euler_degenerate_literal(const XPoly& f, int p) {
    if (p < 0)
        throw std::invalid_argument("operator order must be nonnegative");
    XPoly acc = f;
    for (int j = 0; j < p; ++j)
        acc = XPoly::x() * acc.derivative() - acc.scaled(LambdaPoly::monomial(Rational(j), 1));
    return acc;
}

TruncatedSeries<LambdaPoly> apply_euler_degenerate_literal(const TruncatedSeries<LambdaPoly>& f, int p) {
    if (p < 0)
        throw std::invalid_argument("operator order must be nonnegative");
    auto acc = f;
    for (int j = 0; j < p; ++j)
        acc = acc.differentiated().shifted_up(1) - acc.scaled_by(LambdaPoly::monomial(Rational(j), 1));
    return acc;
}

namespace {
template <typename T, typename Literal, typename Eigen>
T checked_pair(Literal&& literal_path, Eigen&& eigen_path) {
    T literal = literal_path();
    T eigen = eigen_path();
    if (!(literal == eigen))
        throw std::logic_error("operator paths disagree");
    return eigen;
}
}  // namespace

XPoly apply_d_r_literal(const XPoly& f, int r) {
    if (r < 0)
        throw std::invalid_argument("operator order must be nonnegative");
    XPoly acc = XPoly::monomial(LambdaPoly::one(), r) * f;
    for (int j = 0; j < r; ++j)
        acc = acc.derivative();
    return acc.scaled(Rational(BigInt(1), factorial_int(r)));
}

TruncatedSeries<LambdaPoly> apply_d_r_literal(const TruncatedSeries<LambdaPoly>& f, int r) {
    if (r < 0)
        throw std::invalid_argument("operator order must be nonnegative");
    auto acc = f.shifted_up(r);
    for (int j = 0; j < r; ++j)
        acc = acc.differentiated();
    return acc.scaled(Rational(BigInt(1), factorial_int(r)));
}

XPoly apply_d_r(const XPoly& f, int r) {
    auto eigen = [&] {
        std::vector<LambdaPoly> out(static_cast<size_t>(f.degree() + 1));
        for (int k = 0; k <= f.degree(); ++k)
            out[static_cast<size_t>(k)] = f.coeff(k).scaled(Rational(binomial_int(k + r, r)));
        return XPoly(std::move(out));
    };
    return checked_pair<XPoly>([&] { return apply_d_r_literal(f, r); }, eigen);
}

TruncatedSeries<LambdaPoly> apply_d_r(const TruncatedSeries<LambdaPoly>& f, int r) {
    auto literal = apply_d_r_literal(f, r);
    auto eigen = TruncatedSeries<LambdaPoly>::build(
                     f.order(),
                     [&](int k) { return f.coefficient(k).scaled(Rational(binomial_int(k + r, r))); })
        .restricted_to(f.valid_order());
    for (int k = 0; k <= literal.valid_order() && k <= eigen.valid_order(); ++k)
        if (!(literal.coefficient(k) == eigen.coefficient(k)))
            throw std::logic_error("operator paths disagree");
    return eigen;
}

TruncatedSeries<LambdaPoly> euler_degenerate_on_exp(int p, int order) {
    if (p < 1)
        throw std::invalid_argument("euler_degenerate_on_exp requires p >= 1");
    BigInt fact = 1;
    return TruncatedSeries<LambdaPoly>::build(order, [&](int n) {
        if (n > 0)
            fact *= n;
        return falling_factorial(Rational(n), p).scaled(Rational(BigInt(1), fact));
    });
}

XPoly d_r_on_fubini(const StirlingTriangle& second, int r, int n) {
    return apply_d_r_literal(fubini_polynomial(second, n), r);
}

}  // namespace degenkit
