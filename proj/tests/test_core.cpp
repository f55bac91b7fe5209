#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degenkit/degen_core.hpp"
#include "degenkit/stirling.hpp"
#include "support/oracles.hpp"

#include <stdexcept>

using degenkit::BigInt;
using degenkit::LambdaPoly;
using degenkit::Rational;
using degenkit::StirlingKind;
using degenkit::XPoly;

namespace {
Rational rat(std::int64_t num, std::int64_t den) {
    return {BigInt(num), BigInt(den)};
}

LambdaPoly L(std::string_view text) {
    return LambdaPoly::parse(text);
}
}  // namespace

TEST_CASE("deformed falling factorials in x") {
    CHECK(degenkit::falling_factorial_x(0) == XPoly::one());
    CHECK(degenkit::falling_factorial_x(1) == XPoly::x());
    // x(x - L) = x^2 - L x
    CHECK(degenkit::falling_factorial_x(2) ==
          XPoly::monomial(LambdaPoly::one(), 2) - XPoly::monomial(LambdaPoly::lambda(), 1));
    CHECK(degenkit::falling_factorial_x(5).degree() == 5);
}

TEST_CASE("classical falling factorial") {
    // (x)_3 = x(x-1)(x-2) = 2x - 3x^2 + x^3
    XPoly expected = XPoly::monomial(LambdaPoly(Rational(2)), 1) -
                     XPoly::monomial(LambdaPoly(Rational(3)), 2) + XPoly::monomial(LambdaPoly::one(), 3);
    CHECK(degenkit::classical_falling_factorial_x(3) == expected);
    CHECK(degenkit::classical_falling_factorial_x(0) == XPoly::one());
}

TEST_CASE("one falling factorial") {
    CHECK(degenkit::one_falling_factorial(0) == LambdaPoly::one());
    CHECK(degenkit::one_falling_factorial(1) == LambdaPoly::one());
    CHECK(degenkit::one_falling_factorial(3) == L("1 - 3*L + 2*L^2"));
    CHECK(degenkit::one_falling_factorial(4) == L("1 - 6*L + 11*L^2 - 6*L^3"));
    for (int n = 0; n <= 12; ++n)
        CHECK(degenkit::one_falling_factorial(n).eval(Rational(0)) == Rational(1));
}

TEST_CASE("falling factorial at a point") {
    for (std::int64_t k = 0; k <= 6; ++k)
        CHECK(degenkit::falling_factorial(Rational(k), 1) == LambdaPoly(Rational(k)));
    CHECK(degenkit::falling_factorial(Rational(2), 2) == L("4 - 2*L"));
    // (1-L)_{2,L} = (1)_{2,L} (1 - 2L)
    CHECK(degenkit::falling_factorial(L("1 - L"), 2) ==
          degenkit::one_falling_factorial(2) * L("1 - 2*L"));
    // and the same shape one step deeper
    CHECK(degenkit::falling_factorial(L("1 - L"), 3) ==
          degenkit::one_falling_factorial(3) * L("1 - 3*L"));
}

TEST_CASE("deformed exponential series") {
    auto ex = degenkit::exp_degenerate_series(6);
    CHECK(ex.coefficient(0) == XPoly::one());
    CHECK(ex.coefficient(1) == XPoly::x());

    auto e1 = degenkit::exp_degenerate_one_series(8);
    CHECK(e1.coefficient(0) == LambdaPoly::one());
    CHECK(e1.coefficient(2) == L("1/2 - 1/2*L"));
    for (int n = 0; n <= 8; ++n) {
        CHECK(e1.coefficient(n) == degenkit::one_falling_factorial(n).scaled(
                                       Rational(BigInt(1), degenkit::factorial_int(n))));
        // L -> 0 recovers exp(t)
        CHECK(e1.coefficient(n).eval(Rational(0)) == Rational(BigInt(1), degenkit::factorial_int(n)));
    }
}

TEST_CASE("deformed logarithm series") {
    auto lg = degenkit::log_degenerate_series(16);
    CHECK(lg.coefficient(0).is_zero());
    CHECK(lg.coefficient(1) == LambdaPoly::one());
    CHECK(lg.coefficient(2) == L("-1/2 + 1/2*L"));
    CHECK(lg.coefficient(3) == L("1/3 - 1/2*L + 1/6*L^2"));
    for (int n = 1; n <= 16; ++n) {
        CHECK(lg.coefficient(n) == degenkit::lambda_falling_product(n).scaled(
                                       Rational(BigInt(1), degenkit::factorial_int(n))));
        // classical limit: (-1)^{n-1}/n
        CHECK(lg.coefficient(n).eval(Rational(0)) ==
              Rational(BigInt(n % 2 == 1 ? 1 : -1), BigInt(n)));
    }
}

TEST_CASE("lambda falling product") {
    CHECK(degenkit::lambda_falling_product(1) == LambdaPoly::one());
    CHECK(degenkit::lambda_falling_product(2) == L("-1 + L"));
    CHECK(degenkit::lambda_falling_product(3) == L("2 - 3*L + L^2"));
    CHECK_THROWS_AS(degenkit::lambda_falling_product(0), std::invalid_argument);
}

TEST_CASE("deformed polylogarithm series") {
    for (int weight : {-1, 0, 1, 2, 3}) {
        auto li = degenkit::polylog_degenerate_series(weight, 8);
        CHECK(li.coefficient(0).is_zero());
        CHECK(li.coefficient(1) == LambdaPoly::one());
    }
    auto li2 = degenkit::polylog_degenerate_series(2, 12);
    CHECK(li2.coefficient(2) == L("1/4 - 1/4*L"));
    CHECK(li2.coefficient(3) == L("1/9 - 1/6*L + 1/18*L^2"));
    for (int n = 1; n <= 12; ++n)
        CHECK(li2.coefficient(n).eval(Rational(0)) == Rational(BigInt(1), BigInt(n) * BigInt(n)));

    // weight 1 matches -log_L(1 - t) coefficient for coefficient
    auto li1 = degenkit::polylog_degenerate_series(1, 12);
    auto lg = degenkit::log_degenerate_series(12);
    for (int n = 1; n <= 12; ++n) {
        Rational sign(BigInt(n % 2 == 0 ? 1 : -1));
        CHECK(li1.coefficient(n) == -lg.coefficient(n).scaled(sign));
    }
}

TEST_CASE("second-kind triangle by recurrence") {
    auto tri = degenkit::stirling_second_by_recurrence(8);
    CHECK(tri.kind() == StirlingKind::second);
    CHECK(tri.at(0, 0) == LambdaPoly::one());
    CHECK(tri.at(1, 1) == LambdaPoly::one());
    CHECK(tri.at(2, 1) == L("1 - L"));
    CHECK(tri.at(3, 1) == L("1 - 3*L + 2*L^2"));
    CHECK(tri.at(3, 2) == L("3 - 3*L"));
    CHECK(tri.at(5, 3) == L("25 - 60*L + 35*L^2"));
    for (int n = 1; n <= 8; ++n) {
        CHECK(tri.at(n, 0).is_zero());
        CHECK(tri.at(n, n) == LambdaPoly::one());
        CHECK(tri.at(n, n + 1).is_zero());
        for (int k = 1; k <= n; ++k)
            CHECK(tri.at(n, k).degree() <= n - k);
    }
}

TEST_CASE("second-kind triangle at L = 0 matches the classical recurrence") {
    auto tri = degenkit::stirling_second_by_recurrence(12);
    auto classical = testsupport::classical_stirling_second(12);
    CHECK(tri.at(4, 2).eval(Rational(0)) == Rational(7));
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(tri.at(n, k).eval(Rational(0)) ==
                  Rational(classical[static_cast<size_t>(n)][static_cast<size_t>(k)]));
}

TEST_CASE("first-kind triangle") {
    auto tri = degenkit::stirling_first_by_egf(12);
    CHECK(tri.kind() == StirlingKind::first);
    CHECK(tri.at(2, 1) == L("-1 + L"));
    auto classical = testsupport::classical_stirling_first_signed(12);
    CHECK(tri.at(3, 1).eval(Rational(0)) == Rational(2));
    for (int n = 0; n <= 12; ++n) {
        CHECK(tri.at(n, n) == LambdaPoly::one());
        for (int k = 0; k <= n; ++k)
            CHECK(tri.at(n, k).eval(Rational(0)) ==
                  Rational(classical[static_cast<size_t>(n)][static_cast<size_t>(k)]));
    }
}

TEST_CASE("the two second-kind constructions agree") {
    auto rec = degenkit::stirling_second_by_recurrence(12);
    auto egf = degenkit::stirling_second_by_egf(12);
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(rec.at(n, k) == egf.at(n, k));
}

TEST_CASE("basis conversions both ways") {
    auto s2 = degenkit::stirling_second_by_recurrence(8);
    auto s1 = degenkit::stirling_first_by_egf(8);
    for (int n = 0; n <= 8; ++n) {
        XPoly rhs5;
        XPoly rhs6;
        for (int k = 0; k <= n; ++k) {
            rhs5 += degenkit::falling_factorial_x(k).scaled(s1.at(n, k));
            rhs6 += degenkit::classical_falling_factorial_x(k).scaled(s2.at(n, k));
        }
        CHECK(degenkit::classical_falling_factorial_x(n) == rhs5);
        CHECK(degenkit::falling_factorial_x(n) == rhs6);
    }
}

TEST_CASE("triangles are mutually inverse") {
    auto s2 = degenkit::stirling_second_by_recurrence(8);
    auto s1 = degenkit::stirling_first_by_egf(8);
    for (int n = 0; n <= 8; ++n) {
        for (int m = 0; m <= 8; ++m) {
            LambdaPoly sum12;
            LambdaPoly sum21;
            for (int k = 0; k <= n; ++k) {
                sum12 += s1.at(n, k) * s2.at(k, m);
                sum21 += s2.at(n, k) * s1.at(k, m);
            }
            LambdaPoly expected = n == m ? LambdaPoly::one() : LambdaPoly::zero();
            CHECK(sum12 == expected);
            CHECK(sum21 == expected);
        }
    }
}

TEST_CASE("deformed log inverts the deformed exponential") {
    int order = 16;
    auto inner = degenkit::exp_degenerate_one_series(order) -
                 degenkit::TruncatedSeries<LambdaPoly>::unit(order);
    auto composed = degenkit::log_degenerate_series(order).composed_with(inner);
    CHECK(composed == degenkit::TruncatedSeries<LambdaPoly>::indeterminate(order));
}

TEST_CASE("falling power sums") {
    for (int n = 1; n <= 30; ++n)
        CHECK(degenkit::falling_power_sum(1, n) == LambdaPoly(Rational(n * (n + 1) / 2)));
    for (int p = 1; p <= 6; ++p)
        CHECK(degenkit::falling_power_sum(p, 1) == degenkit::one_falling_factorial(p));
    CHECK(degenkit::falling_power_sum(2, 2) == L("5 - 3*L"));
    CHECK(degenkit::falling_power_sum(2, 5) == L("55 - 15*L"));
    CHECK(degenkit::falling_power_sum(3, 4) == L("100 - 90*L + 20*L^2"));
    CHECK(degenkit::falling_power_sum(4, 0).is_zero());
}

TEST_CASE("triangle csv serialization") {
    auto tri = degenkit::stirling_second_by_recurrence(2);
    CHECK(tri.to_csv() == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1 - L\n2,2,1\n");
    CHECK(tri.to_csv(Rational(0)) == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,1\n");
}

TEST_CASE("triangle perturbation hook") {
    auto tri = degenkit::stirling_second_by_recurrence(5);
    auto bumped = tri.with_entry_bumped(5, 3, 1);
    CHECK(bumped.at(5, 3) == tri.at(5, 3) + LambdaPoly::one());
    CHECK(bumped.at(5, 2) == tri.at(5, 2));
    CHECK_THROWS_AS(tri.with_entry_bumped(6, 0, 1), std::out_of_range);
}
