#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degenkit/degen_core.hpp"
#include "degenkit/families.hpp"
#include "degenkit/operators.hpp"
#include "support/oracles.hpp"

#include <random>

using degenkit::BigInt;
using degenkit::LambdaPoly;
using degenkit::Rational;
using degenkit::TruncatedSeries;
using degenkit::XPoly;

using LSeries = TruncatedSeries<LambdaPoly>;

TEST_CASE("iterated euler operator eigenvalue action") {
    std::mt19937 gen(67);
    XPoly any = testsupport::random_x_poly(gen);
    CHECK(degenkit::apply_euler_degenerate(any, 0) == any);

    XPoly cubed = XPoly::monomial(LambdaPoly::one(), 3);
    CHECK(degenkit::apply_euler_degenerate(cubed, 1) == cubed.scaled(Rational(3)));
    CHECK(degenkit::apply_euler_degenerate(XPoly::monomial(LambdaPoly::one(), 2), 2) ==
          XPoly::monomial(LambdaPoly::parse("4 - 2*L"), 2));
}

TEST_CASE("euler operator: literal factors agree with eigenvalues") {
    for (int p = 0; p <= 6; ++p)
        for (int k = 0; k <= 16; ++k) {
            XPoly mono = XPoly::monomial(LambdaPoly::one(), k);
            CHECK(degenkit::apply_euler_degenerate_literal(mono, p) ==
                  degenkit::apply_euler_degenerate(mono, p));
        }

    std::mt19937 gen(71);
    for (int i = 0; i < 20; ++i) {
        XPoly f = testsupport::random_x_poly(gen, 6, 2);
        for (int p = 0; p <= 6; ++p)
            CHECK(degenkit::apply_euler_degenerate_literal(f, p) ==
                  degenkit::apply_euler_degenerate(f, p));
    }
}

TEST_CASE("euler operator linearity over Q[L] scalars") {
    std::mt19937 gen(73);
    for (int i = 0; i < 20; ++i) {
        XPoly f = testsupport::random_x_poly(gen);
        XPoly g = testsupport::random_x_poly(gen);
        LambdaPoly a = testsupport::random_lambda_poly(gen, 2);
        LambdaPoly b = testsupport::random_lambda_poly(gen, 2);
        for (int p : {1, 2, 3})
            CHECK(degenkit::apply_euler_degenerate(f.scaled(a) + g.scaled(b), p) ==
                  degenkit::apply_euler_degenerate(f, p).scaled(a) +
                      degenkit::apply_euler_degenerate(g, p).scaled(b));
    }
}

TEST_CASE("d_r operator on polynomials") {
    std::mt19937 gen(79);
    XPoly any = testsupport::random_x_poly(gen);
    CHECK(degenkit::apply_d_r(any, 0) == any);
    CHECK(degenkit::apply_d_r(XPoly::x(), 1) == XPoly::x().scaled(Rational(2)));
    for (int r = 0; r <= 6; ++r)
        CHECK(degenkit::apply_d_r(XPoly::one(), r) == XPoly::one());

    for (int r = 0; r <= 6; ++r)
        for (int k = 0; k <= 16; ++k) {
            XPoly mono = XPoly::monomial(LambdaPoly::one(), k);
            XPoly expected = mono.scaled(Rational(degenkit::binomial_int(k + r, r)));
            CHECK(degenkit::apply_d_r_literal(mono, r) == expected);
            CHECK(degenkit::apply_d_r(mono, r) == expected);
        }

    for (int i = 0; i < 20; ++i) {
        XPoly f = testsupport::random_x_poly(gen, 6, 2);
        LambdaPoly a = testsupport::random_lambda_poly(gen, 2);
        for (int r : {1, 2, 3})
            CHECK(degenkit::apply_d_r(f.scaled(a), r) == degenkit::apply_d_r(f, r).scaled(a));
    }
}

TEST_CASE("operators on series keep full validity through the euler factors") {
    int order = 12;
    auto exp_x = degenkit::lift_series<LambdaPoly>(degenkit::exp_series(order));
    for (int p = 1; p <= 6; ++p) {
        auto literal = degenkit::apply_euler_degenerate_literal(exp_x, p);
        auto eigen = degenkit::apply_euler_degenerate(exp_x, p);
        CHECK(literal.valid_order() == order);
        CHECK(literal == eigen);
    }
}

TEST_CASE("d_r on series: literal path loses r degrees, eigenvalue path none") {
    int order = 10;
    std::mt19937 gen(83);
    auto f = testsupport::random_series<LambdaPoly>(
        gen, order, [](std::mt19937& g) { return testsupport::random_lambda_poly(g, 2); });
    for (int r = 0; r <= 4; ++r) {
        auto literal = degenkit::apply_d_r_literal(f, r);
        CHECK(literal.valid_order() == order - r);
        auto checked = degenkit::apply_d_r(f, r);
        CHECK(checked.valid_order() == order);
        for (int k = 0; k <= order - r; ++k)
            CHECK(literal.coefficient(k) == checked.coefficient(k));
    }
}

TEST_CASE("euler operator applied to the exponential") {
    auto series = degenkit::euler_degenerate_on_exp(1, 10);
    CHECK(series.coefficient(0).is_zero());
    for (int n = 1; n <= 10; ++n)
        CHECK(series.coefficient(n) ==
              LambdaPoly(Rational(BigInt(n), degenkit::factorial_int(n))));

    for (int p = 1; p <= 4; ++p)
        CHECK(degenkit::euler_degenerate_on_exp(p, 10).coefficient(0).is_zero());
}

TEST_CASE("d_r on fubini polynomials") {
    auto tri = degenkit::stirling_second_by_recurrence(8);
    for (int n = 0; n <= 8; ++n)
        CHECK(degenkit::d_r_on_fubini(tri, 0, n) == degenkit::fubini_polynomial(tri, n));
    CHECK(degenkit::d_r_on_fubini(tri, 1, 1) == XPoly::x().scaled(Rational(2)));
    // D_1 F_2 = 2(1-L) x + 6 x^2
    XPoly expected = XPoly::monomial(LambdaPoly::parse("2 - 2*L"), 1) +
                     XPoly::monomial(LambdaPoly(Rational(6)), 2);
    CHECK(degenkit::d_r_on_fubini(tri, 1, 2) == expected);
}
