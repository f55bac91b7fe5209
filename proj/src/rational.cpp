#include "degenkit/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>
#include <utility>

namespace degenkit {

BigInt factorial_int(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial of negative integer");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i)
        out *= i;
    return out;
}

BigInt binomial_int(int n, int k) {
    if (n < 0)
        throw std::invalid_argument("binomial with negative upper index");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;  // always exact at this point
    }
    return out;
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        throw std::domain_error("division by zero");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::integer_power(std::int64_t base, int exponent) {
    if (base == 0 && exponent < 0)
        throw std::domain_error("division by zero");
    BigInt p = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0)
        return {BigInt(1), std::move(p)};
    return {std::move(p)};
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

int Rational::compare(const Rational& rhs) const {
    BigInt lhs_scaled = num_ * rhs.den_;
    BigInt rhs_scaled = rhs.num_ * den_;
    if (lhs_scaled < rhs_scaled)
        return -1;
    return lhs_scaled > rhs_scaled ? 1 : 0;
}

std::string Rational::to_string() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

Rational Rational::parse(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw std::invalid_argument("empty rational literal");
    text = text.substr(begin, end - begin + 1);

    auto parse_int = [](std::string_view part) -> BigInt {
        if (part.empty())
            throw std::invalid_argument("malformed rational literal");
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size())
            throw std::invalid_argument("malformed rational literal");
        for (size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9')
                throw std::invalid_argument("malformed rational literal: " + std::string(part));
        return BigInt(std::string(part));
    };

    size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return {parse_int(text)};
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den.is_zero())
        throw std::invalid_argument("rational literal with zero denominator");
    return {std::move(num), std::move(den)};
}

}  // namespace degenkit
