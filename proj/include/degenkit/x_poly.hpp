#pragma once

#include "degenkit/lambda_poly.hpp"
#include "degenkit/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace degenkit {

/// Univariate polynomial in x whose coefficients live in Q[L]. Dense
/// representation, index = x-degree, no trailing zero coefficient.
class XPoly {
  public:
    XPoly() = default;  // zero polynomial
    XPoly(LambdaPoly constant);
    XPoly(Rational constant) : XPoly(LambdaPoly(std::move(constant))) {}
    XPoly(std::int64_t constant) : XPoly(LambdaPoly(constant)) {}
    explicit XPoly(std::vector<LambdaPoly> coefficients);

    static XPoly zero() { return {}; }
    static XPoly one() { return {LambdaPoly::one()}; }
    /// The indeterminate x itself.
    static XPoly x();
    static XPoly monomial(LambdaPoly coefficient, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

    /// Coefficient of x^k; zero outside the stored range.
    const LambdaPoly& coeff(int k) const;
    const std::vector<LambdaPoly>& coefficients() const { return coeffs_; }

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& rhs);
    XPoly& operator-=(const XPoly& rhs);
    friend XPoly operator+(XPoly lhs, const XPoly& rhs) { return lhs += rhs; }
    friend XPoly operator-(XPoly lhs, const XPoly& rhs) { return lhs -= rhs; }
    friend XPoly operator*(const XPoly& lhs, const XPoly& rhs);

    friend bool operator==(const XPoly& lhs, const XPoly& rhs) = default;

    XPoly scaled(const Rational& factor) const { return scaled(LambdaPoly(factor)); }
    XPoly scaled(const LambdaPoly& factor) const;

    /// d/dx, term by term.
    XPoly derivative() const;
    /// Antiderivative with integration constant 0, so the result vanishes
    /// at x = 0.
    XPoly antiderivative_from_zero() const;
    /// Exact division by x. Throws std::domain_error("not divisible by x")
    /// when the constant coefficient is nonzero.
    XPoly divided_by_x() const;

    /// Substitute x = value; the result stays in Q[L].
    LambdaPoly eval_x(const Rational& value) const;
    /// Substitute both x and L, exact.
    Rational eval(const Rational& x_value, const Rational& lambda_value) const;

    /// Canonical rendering, e.g. "(1 - L)*x + x^2"; "0" for zero.
    std::string to_string() const;

  private:
    std::vector<LambdaPoly> coeffs_;

    void trim();
};

}  // namespace degenkit
