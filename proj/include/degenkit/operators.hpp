#pragma once

#include "degenkit/lambda_poly.hpp"
#include "degenkit/series.hpp"
#include "degenkit/stirling.hpp"
#include "degenkit/x_poly.hpp"

namespace degenkit {

/// Iterated deformed Euler operator
///   (x d/dx)_{p,L} = (x d/dx)(x d/dx - L)...(x d/dx - (p-1)L),
/// which acts diagonally on monomials: x^n -> (n)_{p,L} x^n. These apply
/// the eigenvalue action directly.
XPoly apply_euler_degenerate(const XPoly& f, int p);
TruncatedSeries<LambdaPoly> apply_euler_degenerate(const TruncatedSeries<LambdaPoly>& f, int p);

/// Reference path: the operator applied factor by factor through literal
/// derivatives. Must agree with the eigenvalue action everywhere.
XPoly apply_euler_degenerate_literal(const XPoly& f, int p);
TruncatedSeries<LambdaPoly> apply_euler_degenerate_literal(const TruncatedSeries<LambdaPoly>& f, int p);

/// D_r f = (1/r!) (d/dx)^r [x^r f]; diagonal on monomials with eigenvalue
/// C(k+r, r). Both entry points run the literal derivative path and the
/// eigenvalue path and throw std::logic_error if the two ever disagree.
XPoly apply_d_r(const XPoly& f, int r);
TruncatedSeries<LambdaPoly> apply_d_r(const TruncatedSeries<LambdaPoly>& f, int r);

/// Literal-only variants of D_r (no eigenvalue shortcut), used where an
/// independently computed route is needed.
XPoly apply_d_r_literal(const XPoly& f, int r);
TruncatedSeries<LambdaPoly> apply_d_r_literal(const TruncatedSeries<LambdaPoly>& f, int r);

/// (x d/dx)_{p,L} e^x as a series in x: coefficient of x^n is (n)_{p,L}/n!.
TruncatedSeries<LambdaPoly> euler_degenerate_on_exp(int p, int order);

/// D_r applied to the Fubini polynomial of index n through the literal
/// definition (shift by x^r, differentiate r times, divide by r!).
XPoly d_r_on_fubini(const StirlingTriangle& second, int r, int n);

}  // namespace degenkit
