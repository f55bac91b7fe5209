#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degenkit/lambda_poly.hpp"
#include "degenkit/rational.hpp"
#include "degenkit/x_poly.hpp"
#include "support/oracles.hpp"

#include <random>
#include <stdexcept>

using degenkit::BigInt;
using degenkit::LambdaPoly;
using degenkit::Rational;
using degenkit::XPoly;
using testsupport::random_lambda_poly;
using testsupport::random_rational;
using testsupport::random_x_poly;

namespace {
Rational rat(std::int64_t num, std::int64_t den) {
    return {BigInt(num), BigInt(den)};
}

LambdaPoly lpoly(std::initializer_list<std::int64_t> ints) {
    std::vector<Rational> coeffs;
    for (auto v : ints)
        coeffs.emplace_back(v);
    return LambdaPoly(std::move(coeffs));
}
}  // namespace

TEST_CASE("rational arithmetic basics") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(2, 4).numerator() == 1);
    CHECK(rat(2, 4).denominator() == 2);
    CHECK(rat(-6, -4) == rat(3, 2));
    CHECK((rat(-6, 4)).denominator() == 2);

    CHECK_THROWS_WITH_AS(rat(7, 3) / Rational(0), "division by zero", std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);

    CHECK(Rational(5).to_string() == "5");
    CHECK(rat(-3, 2).to_string() == "-3/2");
    CHECK(Rational().to_string() == "0");
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK(rat(-1, 2) < Rational(0));
    CHECK(rat(-7, 2).abs() == rat(7, 2));
}

TEST_CASE("rational integer powers") {
    CHECK(Rational::integer_power(3, 2) == Rational(9));
    CHECK(Rational::integer_power(2, 0) == Rational(1));
    CHECK(Rational::integer_power(2, -3) == rat(1, 8));
    CHECK(Rational::integer_power(1, -5) == Rational(1));
}

TEST_CASE("rational parse round trip") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-3/2") == rat(-3, 2));
    CHECK(Rational::parse(" 7/3 ") == rat(7, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

    std::mt19937 gen(7);
    for (int i = 0; i < 200; ++i) {
        Rational r = random_rational(gen);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937 gen(11);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(gen);
        Rational b = random_rational(gen);
        Rational c = random_rational(gen);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational::zero() == a);
        CHECK(a * Rational::one() == a);
        CHECK((a + (-a)).is_zero());
        if (!a.is_zero())
            CHECK(a / a == Rational::one());
    }
}

TEST_CASE("lambda poly basics") {
    LambdaPoly one_minus = lpoly({1, -1});
    LambdaPoly one_minus_two = lpoly({1, -2});
    CHECK(one_minus * one_minus_two == lpoly({1, -3, 2}));

    LambdaPoly p = lpoly({3, 0, 5});
    CHECK(p + LambdaPoly::zero() == p);
    CHECK(LambdaPoly::lambda() * LambdaPoly::lambda() == LambdaPoly::monomial(Rational(1), 2));

    CHECK(p.degree() == 2);
    CHECK(LambdaPoly::zero().degree() == -1);
    CHECK(LambdaPoly::zero().is_zero());
    CHECK(p.coeff(1).is_zero());
    CHECK(p.coeff(7).is_zero());
}

TEST_CASE("lambda poly canonical form") {
    // Trailing zeros are trimmed on construction; normalizing twice changes nothing.
    LambdaPoly p(std::vector<Rational>{Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    LambdaPoly again(p.coefficients());
    CHECK(again == p);

    LambdaPoly diff = lpoly({1, 4}) - lpoly({1, 4});
    CHECK(diff.is_zero());
    CHECK(diff.coefficients().empty());

    std::mt19937 gen(13);
    for (int i = 0; i < 100; ++i) {
        LambdaPoly a = random_lambda_poly(gen);
        LambdaPoly b = random_lambda_poly(gen);
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("lambda poly evaluation") {
    LambdaPoly p = lpoly({1, -3, 2});
    CHECK(p.eval(Rational(0)) == Rational(1));
    CHECK(p.eval(Rational(1)) == Rational(0));
    CHECK(LambdaPoly::zero().eval(rat(13, 7)).is_zero());

    std::mt19937 gen(17);
    for (int i = 0; i < 100; ++i) {
        LambdaPoly a = random_lambda_poly(gen);
        LambdaPoly b = random_lambda_poly(gen);
        Rational v = random_rational(gen);
        CHECK((a * b).eval(v) == a.eval(v) * b.eval(v));
        CHECK((a + b).eval(v) == a.eval(v) + b.eval(v));
    }
}

TEST_CASE("lambda poly ring axioms") {
    std::mt19937 gen(19);
    for (int i = 0; i < 60; ++i) {
        LambdaPoly a = random_lambda_poly(gen);
        LambdaPoly b = random_lambda_poly(gen);
        LambdaPoly c = random_lambda_poly(gen);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + LambdaPoly::zero() == a);
        CHECK(a * LambdaPoly::one() == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("lambda poly rendering") {
    CHECK(lpoly({1, -3, 2}).to_string() == "1 - 3*L + 2*L^2");
    CHECK(lpoly({5, -3}).to_string() == "5 - 3*L");
    CHECK(lpoly({1, -1}).to_string() == "1 - L");
    CHECK(LambdaPoly::lambda().to_string() == "L");
    CHECK((-LambdaPoly::lambda()).to_string() == "-L");
    CHECK(LambdaPoly::zero().to_string() == "0");
    CHECK(LambdaPoly::monomial(rat(-1, 2), 3).to_string() == "-1/2*L^3");
    CHECK(lpoly({0, 0, 7}).to_string() == "7*L^2");
}

TEST_CASE("lambda poly parse inverts rendering") {
    CHECK(LambdaPoly::parse("1 - 3*L + 2*L^2") == lpoly({1, -3, 2}));
    CHECK(LambdaPoly::parse("L") == LambdaPoly::lambda());
    CHECK(LambdaPoly::parse("-L + L^2") == lpoly({0, -1, 1}));
    CHECK(LambdaPoly::parse("0") == LambdaPoly::zero());
    CHECK(LambdaPoly::parse("3/2*L^2") == LambdaPoly::monomial(rat(3, 2), 2));
    CHECK_THROWS_AS(LambdaPoly::parse("L^"), std::invalid_argument);
    CHECK_THROWS_AS(LambdaPoly::parse("1 + + L"), std::invalid_argument);

    std::mt19937 gen(23);
    for (int i = 0; i < 200; ++i) {
        LambdaPoly p = random_lambda_poly(gen);
        CHECK(LambdaPoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("xpoly basics") {
    CHECK(XPoly::x() * XPoly::x() == XPoly::monomial(LambdaPoly::one(), 2));

    XPoly x_plus = XPoly::x() + XPoly(LambdaPoly::lambda());
    XPoly x_minus = XPoly::x() - XPoly(LambdaPoly::lambda());
    XPoly expected = XPoly::monomial(LambdaPoly::one(), 2) - XPoly(LambdaPoly::monomial(Rational(1), 2));
    CHECK(x_plus * x_minus == expected);

    std::mt19937 gen(29);
    XPoly p = random_x_poly(gen);
    CHECK(p * XPoly::one() == p);
    CHECK(p + XPoly::zero() == p);
}

TEST_CASE("xpoly ring axioms") {
    std::mt19937 gen(31);
    for (int i = 0; i < 40; ++i) {
        XPoly a = random_x_poly(gen);
        XPoly b = random_x_poly(gen);
        XPoly c = random_x_poly(gen);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("xpoly derivative") {
    CHECK(XPoly::monomial(LambdaPoly::one(), 2).derivative() == XPoly::x().scaled(Rational(2)));
    CHECK(XPoly(Rational(5)).derivative().is_zero());

    // d/dx (x^3 - L x) = 3 x^2 - L
    XPoly p = XPoly::monomial(LambdaPoly::one(), 3) - XPoly::monomial(LambdaPoly::lambda(), 1);
    XPoly expected = XPoly::monomial(LambdaPoly(Rational(3)), 2) - XPoly(LambdaPoly::lambda());
    CHECK(p.derivative() == expected);
}

TEST_CASE("xpoly antiderivative") {
    CHECK(XPoly::one().antiderivative_from_zero() == XPoly::x());
    CHECK(XPoly::x().antiderivative_from_zero() ==
          XPoly::monomial(LambdaPoly(Rational(BigInt(1), BigInt(2))), 2));

    // integral of t^2 + L t from 0 is x^3/3 + L x^2/2
    XPoly p = XPoly::monomial(LambdaPoly::one(), 2) + XPoly::monomial(LambdaPoly::lambda(), 1);
    XPoly expected = XPoly::monomial(LambdaPoly(rat(1, 3)), 3) +
                     XPoly::monomial(LambdaPoly::lambda().scaled(rat(1, 2)), 2);
    CHECK(p.antiderivative_from_zero() == expected);

    std::mt19937 gen(37);
    for (int i = 0; i < 60; ++i) {
        XPoly q = random_x_poly(gen);
        CHECK(q.antiderivative_from_zero().derivative() == q);
        CHECK(q.antiderivative_from_zero().eval_x(Rational(0)).is_zero());
    }
}

TEST_CASE("xpoly division by x") {
    XPoly p = XPoly::monomial(LambdaPoly::one(), 2) + XPoly::x();
    CHECK(p.divided_by_x() == XPoly::x() + XPoly::one());
    CHECK(XPoly::x().divided_by_x() == XPoly::one());
    CHECK_THROWS_WITH_AS((XPoly::one() + XPoly::x()).divided_by_x(), "not divisible by x",
                         std::domain_error);
}

TEST_CASE("xpoly evaluation") {
    XPoly p = XPoly::monomial(LambdaPoly::one(), 2) + XPoly::monomial(LambdaPoly::lambda(), 1) +
              XPoly(Rational(3));
    CHECK(p.eval_x(Rational(0)) == LambdaPoly(Rational(3)));
    CHECK(p.eval_x(Rational(2)) == LambdaPoly::lambda().scaled(Rational(2)) + LambdaPoly(Rational(7)));
    CHECK(p.eval(Rational(2), Rational(1)) == Rational(9));
}

TEST_CASE("xpoly rendering") {
    XPoly phi2 = XPoly::monomial(LambdaPoly::parse("1 - L"), 1) + XPoly::monomial(LambdaPoly::one(), 2);
    CHECK(phi2.to_string() == "(1 - L)*x + x^2");

    XPoly p = XPoly::monomial(LambdaPoly::one(), 2) - XPoly::monomial(LambdaPoly::lambda(), 1);
    CHECK(p.to_string() == "-L*x + x^2");

    CHECK(XPoly::zero().to_string() == "0");
    CHECK(XPoly(Rational(1)).to_string() == "1");
    CHECK((XPoly(LambdaPoly::parse("1 - L")) + XPoly::x()).to_string() == "1 - L + x");
    CHECK(XPoly::monomial(LambdaPoly(rat(3, 2)), 3).to_string() == "3/2*x^3");
    CHECK(XPoly::monomial(LambdaPoly::monomial(Rational(2), 1), 1).to_string() == "2*L*x");
}
