#pragma once

#include "degenkit/lambda_poly.hpp"
#include "degenkit/rational.hpp"
#include "degenkit/series.hpp"
#include "degenkit/x_poly.hpp"

namespace degenkit {

/// (x)_{n,L} = x (x - L) (x - 2L) ... (x - (n-1)L); 1 for n = 0.
XPoly falling_factorial_x(int n);

/// Ordinary falling factorial (x)_n = x (x-1) ... (x-n+1).
XPoly classical_falling_factorial_x(int n);

/// (base)_{p,L} = prod_{j=0}^{p-1} (base - j L) for a Q[L] base.
LambdaPoly falling_factorial(const LambdaPoly& base, int p);
LambdaPoly falling_factorial(const Rational& base, int p);

/// (1)_{n,L} = prod_{j=0}^{n-1} (1 - j L).
LambdaPoly one_falling_factorial(int n);

/// prod_{j=1}^{n-1} (L - j): the closed Q[L] form of L^{n-1} (1)_{n,1/L},
/// which is how the deformed log/polylog coefficients stay polynomial in L.
LambdaPoly lambda_falling_product(int n);

/// S_{n,L}(p) = (1)_{p,L} + (2)_{p,L} + ... + (n)_{p,L}; 0 for n = 0.
LambdaPoly falling_power_sum(int p, int n);

/// Deformed exponential: coefficient of t^n is (x)_{n,L} / n!.
TruncatedSeries<XPoly> exp_degenerate_series(int order);

/// Deformed exponential at x = 1: coefficient of t^n is (1)_{n,L} / n!.
TruncatedSeries<LambdaPoly> exp_degenerate_one_series(int order);

/// Compositional inverse of the deformed exponential minus one:
/// coefficient of t^n (n >= 1) is prod_{j=1}^{n-1}(L - j) / n!.
TruncatedSeries<LambdaPoly> log_degenerate_series(int order);

/// Deformed polylogarithm of integer weight k:
/// coefficient of t^n (n >= 1) is
/// (-1)^{n-1} prod_{j=1}^{n-1}(L - j) / ((n-1)! n^k).
TruncatedSeries<LambdaPoly> polylog_degenerate_series(int weight, int order);

/// Classical e^t over the rationals.
TruncatedSeries<Rational> exp_series(int order);

}  // namespace degenkit
