#pragma once

#include "degenkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degenkit {

/// Univariate polynomial in the deformation parameter, written "L" in all
/// renderings, with exact rational coefficients. Dense representation,
/// index = degree, no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list.
class LambdaPoly {
  public:
    LambdaPoly() = default;  // zero polynomial
    LambdaPoly(Rational constant);
    LambdaPoly(std::int64_t constant) : LambdaPoly(Rational(constant)) {}
    explicit LambdaPoly(std::vector<Rational> coefficients);

    static LambdaPoly zero() { return {}; }
    static LambdaPoly one() { return {Rational::one()}; }
    /// The indeterminate L itself.
    static LambdaPoly lambda();
    static LambdaPoly monomial(Rational coefficient, int degree);

    /// Degree, with -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of L^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// When the polynomial is a single monomial c*L^k, returns (k, c).
    std::optional<std::pair<int, Rational>> single_term() const;

    LambdaPoly operator-() const;
    LambdaPoly& operator+=(const LambdaPoly& rhs);
    LambdaPoly& operator-=(const LambdaPoly& rhs);
    friend LambdaPoly operator+(LambdaPoly lhs, const LambdaPoly& rhs) { return lhs += rhs; }
    friend LambdaPoly operator-(LambdaPoly lhs, const LambdaPoly& rhs) { return lhs -= rhs; }
    friend LambdaPoly operator*(const LambdaPoly& lhs, const LambdaPoly& rhs);

    friend bool operator==(const LambdaPoly& lhs, const LambdaPoly& rhs) = default;

    LambdaPoly scaled(const Rational& factor) const;

    /// Horner evaluation at L = value, exact.
    Rational eval(const Rational& value) const;

    /// Canonical rendering, e.g. "1 - 3*L + 2*L^2"; "0" for zero.
    std::string to_string() const;
    /// Inverse of to_string (whitespace-tolerant).
    /// Throws std::invalid_argument on malformed input.
    static LambdaPoly parse(std::string_view text);

  private:
    std::vector<Rational> coeffs_;

    void trim();
};

}  // namespace degenkit
