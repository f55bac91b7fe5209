#include "degenkit/degen_core.hpp"

#include <stdexcept>

namespace degenkit {

XPoly falling_factorial_x(int n) {
    if (n < 0)
        throw std::invalid_argument("falling factorial with negative order");
    XPoly out = XPoly::one();
    for (int j = 0; j < n; ++j)
        out = out * (XPoly::x() - XPoly(LambdaPoly::monomial(Rational(j), 1)));
    return out;
}

XPoly classical_falling_factorial_x(int n) {
    if (n < 0)
        throw std::invalid_argument("falling factorial with negative order");
    XPoly out = XPoly::one();
    for (int j = 0; j < n; ++j)
        out = out * (XPoly::x() - XPoly(Rational(j)));
    return out;
}

LambdaPoly falling_factorial(const LambdaPoly& base, int p) {
    if (p < 0)
        throw std::invalid_argument("falling factorial with negative order");
    LambdaPoly out = LambdaPoly::one();
    for (int j = 0; j < p; ++j)
        out = out * (base - LambdaPoly::monomial(Rational(j), 1));
    return out;
}

LambdaPoly falling_factorial(const Rational& base, int p) {
    return falling_factorial(LambdaPoly(base), p);
}

LambdaPoly one_falling_factorial(int n) {
    return falling_factorial(Rational::one(), n);
}

LambdaPoly lambda_falling_product(int n) {
    if (n < 1)
        throw std::invalid_argument("lambda_falling_product requires n >= 1");
    LambdaPoly out = LambdaPoly::one();
    for (int j = 1; j < n; ++j)
        out = out * (LambdaPoly::lambda() - LambdaPoly(Rational(j)));
    return out;
}

LambdaPoly falling_power_sum(int p, int n) {
    if (p < 0 || n < 0)
        throw std::invalid_argument("falling_power_sum requires p, n >= 0");
    LambdaPoly out;
    for (int k = 1; k <= n; ++k)
        out += falling_factorial(Rational(k), p);
    return out;
}

TruncatedSeries<XPoly> exp_degenerate_series(int order) {
    XPoly product = XPoly::one();
    BigInt fact = 1;
    return TruncatedSeries<XPoly>::build(order, [&](int n) {
        if (n > 0) {
            product = product * (XPoly::x() - XPoly(LambdaPoly::monomial(Rational(n - 1), 1)));
            fact *= n;
        }
        return product.scaled(Rational(BigInt(1), fact));
    });
}

TruncatedSeries<LambdaPoly> exp_degenerate_one_series(int order) {
    LambdaPoly product = LambdaPoly::one();
    BigInt fact = 1;
    return TruncatedSeries<LambdaPoly>::build(order, [&](int n) {
        if (n > 0) {
            product = product * (LambdaPoly::one() - LambdaPoly::monomial(Rational(n - 1), 1));
            fact *= n;
        }
        return product.scaled(Rational(BigInt(1), fact));
    });
}

TruncatedSeries<LambdaPoly> log_degenerate_series(int order) {
    LambdaPoly product = LambdaPoly::one();
    BigInt fact = 1;
    return TruncatedSeries<LambdaPoly>::build(order, [&](int n) {
        if (n == 0)
            return LambdaPoly::zero();
        if (n > 1) {
            product = product * (LambdaPoly::lambda() - LambdaPoly(Rational(n - 1)));
            fact *= n;
        }
        return product.scaled(Rational(BigInt(1), fact));
    });
}

TruncatedSeries<LambdaPoly> polylog_degenerate_series(int weight, int order) {
    LambdaPoly product = LambdaPoly::one();
    BigInt fact = 1;
    return TruncatedSeries<LambdaPoly>::build(order, [&](int n) {
        if (n == 0)
            return LambdaPoly::zero();
        if (n > 1) {
            product = product * (LambdaPoly(Rational(n - 1)) - LambdaPoly::lambda());
            fact *= n - 1;
        }
        // product now carries (-1)^{n-1} prod_{j=1}^{n-1} (L - j)
        return product.scaled(Rational(BigInt(1), fact) * Rational::integer_power(n, -weight));
    });
}

TruncatedSeries<Rational> exp_series(int order) {
    BigInt fact = 1;
    return TruncatedSeries<Rational>::build(order, [&](int n) {
        if (n > 0)
            fact *= n;
        return Rational(BigInt(1), fact);
    });
}

TruncatedSeries<LambdaPoly> to_series_in_x(const XPoly& p, int order) {
    if (p.degree() > order)
        throw std::invalid_argument("polynomial degree exceeds truncation order");
    return TruncatedSeries<LambdaPoly>::build(order, [&](int k) { return p.coeff(k); });
}

}  // namespace degenkit
