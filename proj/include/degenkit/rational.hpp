#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace degenkit {

using BigInt = boost::multiprecision::cpp_int;

/// n! as an exact integer. Requires n >= 0.
BigInt factorial_int(int n);

/// Binomial coefficient C(n, k); zero for k < 0 or k > n. Requires n >= 0.
BigInt binomial_int(int n, int k);

/// Exact rational scalar, the base field for every coefficient in the
/// library. Kept canonical at all times: denominator > 0 and
/// gcd(|numerator|, denominator) == 1, so operator== is field equality.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    static Rational zero() { return {}; }
    static Rational one() { return {1}; }

    /// base^exponent, exact; negative exponents give the reciprocal.
    /// Requires base != 0 when exponent < 0.
    static Rational integer_power(std::int64_t base, int exponent);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error("division by zero") when rhs == 0.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) = default;

    /// Three-way order: -1, 0, +1.
    int compare(const Rational& rhs) const;
    friend bool operator<(const Rational& lhs, const Rational& rhs) { return lhs.compare(rhs) < 0; }
    friend bool operator<=(const Rational& lhs, const Rational& rhs) { return lhs.compare(rhs) <= 0; }
    friend bool operator>(const Rational& lhs, const Rational& rhs) { return lhs.compare(rhs) > 0; }
    friend bool operator>=(const Rational& lhs, const Rational& rhs) { return lhs.compare(rhs) >= 0; }

    Rational scaled(const Rational& factor) const { return *this * factor; }
    Rational abs() const { return is_negative() ? -*this : *this; }

    /// Canonical rendering: "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    /// Inverse of to_string; accepts surrounding whitespace.
    /// Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

  private:
    BigInt num_;
    BigInt den_;

    void reduce();
};

}  // namespace degenkit
