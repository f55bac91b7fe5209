#pragma once

#include "degenkit/lambda_poly.hpp"
#include "degenkit/rational.hpp"
#include "degenkit/x_poly.hpp"

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degenkit {

/// Exact coefficient ring for truncated series: Rational, LambdaPoly or
/// XPoly. "scaled" is multiplication by a rational scalar (every ring here
/// is a Q-algebra, so dividing by a nonzero integer is always exact).
template <typename R>
concept CoefficientRing = requires(const R a, const R b, const Rational& q) {
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.scaled(q) } -> std::same_as<R>;
    { a.to_string() } -> std::same_as<std::string>;
};

inline constexpr int kDefaultOrder = 16;

/// Formal power series truncated at a fixed order N: exactly N+1 stored
/// coefficients for degrees 0..N. Arithmetic requires equal orders.
///
/// Two pieces of metadata ride along:
///   valid_order  — coefficients 0..valid_order are exact; operations that
///                  consume unknown higher coefficients (differentiated)
///                  lower it, operations that shift content upward
///                  (integrated, shifted_up) raise it back, capped at N.
///   top_dropped  — set when a nonzero coefficient was pushed beyond the
///                  truncation order and lost (integrated / shifted_up).
template <CoefficientRing R>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order)
        : coeffs_(checked_size(order), R::zero()), order_(order), valid_(order) {}

    static TruncatedSeries constant(R value, int order) {
        TruncatedSeries out(order);
        out.coeffs_[0] = std::move(value);
        return out;
    }

    static TruncatedSeries unit(int order) { return constant(R::one(), order); }

    /// The series "t".
    static TruncatedSeries indeterminate(int order) {
        TruncatedSeries out(order);
        if (order >= 1)
            out.coeffs_[1] = R::one();
        return out;
    }

    template <typename Fn>
    static TruncatedSeries build(int order, Fn coefficient_at) {
        TruncatedSeries out(order);
        for (int k = 0; k <= order; ++k)
            out.coeffs_[static_cast<size_t>(k)] = coefficient_at(k);
        return out;
    }

    static TruncatedSeries from_coefficients(std::vector<R> coefficients, int order) {
        if (static_cast<int>(coefficients.size()) > order + 1)
            throw std::invalid_argument("more coefficients than the truncation order admits");
        coefficients.resize(static_cast<size_t>(order) + 1);
        TruncatedSeries out(order);
        out.coeffs_ = std::move(coefficients);
        return out;
    }

    int order() const { return order_; }
    int valid_order() const { return valid_; }
    bool top_dropped() const { return top_dropped_; }

    /// Throws std::out_of_range("beyond truncation order") outside 0..N.
    const R& coefficient(int k) const {
        if (k < 0 || k > order_)
            throw std::out_of_range("beyond truncation order");
        return coeffs_[static_cast<size_t>(k)];
    }

    const std::vector<R>& coefficients() const { return coeffs_; }

    /// Copy with the valid-order bound tightened (never loosened).
    TruncatedSeries restricted_to(int valid) const {
        TruncatedSeries out = *this;
        if (valid < out.valid_)
            out.valid_ = valid;
        return out;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries out = *this;
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        lhs.require_same_order(rhs);
        TruncatedSeries out = lhs;
        for (size_t k = 0; k < out.coeffs_.size(); ++k)
            out.coeffs_[k] = out.coeffs_[k] + rhs.coeffs_[k];
        out.absorb_metadata(rhs);
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        lhs.require_same_order(rhs);
        TruncatedSeries out = lhs;
        for (size_t k = 0; k < out.coeffs_.size(); ++k)
            out.coeffs_[k] = out.coeffs_[k] - rhs.coeffs_[k];
        out.absorb_metadata(rhs);
        return out;
    }

    /// Cauchy product truncated at N.
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        lhs.require_same_order(rhs);
        TruncatedSeries out(lhs.order_);
        for (int k = 0; k <= lhs.order_; ++k) {
            R acc = R::zero();
            for (int i = 0; i <= k; ++i) {
                if (lhs.coeffs_[static_cast<size_t>(i)].is_zero())
                    continue;
                acc = acc + lhs.coeffs_[static_cast<size_t>(i)] * rhs.coeffs_[static_cast<size_t>(k - i)];
            }
            out.coeffs_[static_cast<size_t>(k)] = std::move(acc);
        }
        out.valid_ = lhs.order_;
        out.absorb_metadata(lhs);
        out.absorb_metadata(rhs);
        return out;
    }

    /// Coefficient-wise equality on all degrees 0..N (metadata ignored).
    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        return lhs.order_ == rhs.order_ && lhs.coeffs_ == rhs.coeffs_;
    }

    TruncatedSeries scaled(const Rational& factor) const {
        TruncatedSeries out = *this;
        for (auto& c : out.coeffs_)
            c = c.scaled(factor);
        return out;
    }

    /// Coefficient-wise multiplication by a fixed ring element.
    TruncatedSeries scaled_by(const R& factor) const {
        TruncatedSeries out = *this;
        for (auto& c : out.coeffs_)
            c = c * factor;
        return out;
    }

    /// exp(f) = sum f^k / k!. Requires a zero constant term.
    TruncatedSeries exponential() const {
        if (!coeffs_[0].is_zero())
            throw std::domain_error("exp requires zero constant term");
        TruncatedSeries acc = unit(order_);
        TruncatedSeries term = unit(order_);
        for (int k = 1; k <= order_; ++k) {
            term = (term * *this).scaled(Rational(BigInt(1), BigInt(k)));
            acc = acc + term;
        }
        acc.valid_ = valid_;
        acc.top_dropped_ = top_dropped_;
        return acc;
    }

    /// log(1 + f) = sum_{k>=1} (-1)^{k+1} f^k / k. Requires f(0) = 0.
    TruncatedSeries log_one_plus() const {
        if (!coeffs_[0].is_zero())
            throw std::domain_error("log requires zero constant term");
        TruncatedSeries acc(order_);
        TruncatedSeries power = unit(order_);
        for (int k = 1; k <= order_; ++k) {
            power = power * *this;
            Rational w(BigInt(k % 2 == 0 ? -1 : 1), BigInt(k));
            acc = acc + power.scaled(w);
        }
        acc.valid_ = valid_;
        acc.top_dropped_ = top_dropped_;
        return acc;
    }

    /// Substitution f(g) by Horner over g. Requires g(0) = 0.
    TruncatedSeries composed_with(const TruncatedSeries& inner) const {
        require_same_order(inner);
        if (!inner.coeffs_[0].is_zero())
            throw std::domain_error("composition requires nilpotent inner series");
        TruncatedSeries acc = constant(coeffs_[static_cast<size_t>(order_)], order_);
        for (int k = order_ - 1; k >= 0; --k) {
            acc = acc * inner;
            acc.coeffs_[0] = acc.coeffs_[0] + coeffs_[static_cast<size_t>(k)];
        }
        acc.valid_ = std::min(valid_, inner.valid_);
        acc.top_dropped_ = top_dropped_ || inner.top_dropped_;
        return acc;
    }

    /// 1/f for f with constant term one (the only unit inversion needed:
    /// powers of geometric-type series).
    TruncatedSeries geometric_inverse() const {
        if (!(coeffs_[0] == R::one()))
            throw std::domain_error("geometric inverse requires constant term one");
        TruncatedSeries out(order_);
        out.coeffs_[0] = R::one();
        for (int k = 1; k <= order_; ++k) {
            R acc = R::zero();
            for (int i = 1; i <= k; ++i) {
                if (coeffs_[static_cast<size_t>(i)].is_zero())
                    continue;
                acc = acc + coeffs_[static_cast<size_t>(i)] * out.coeffs_[static_cast<size_t>(k - i)];
            }
            out.coeffs_[static_cast<size_t>(k)] = -acc;
        }
        out.valid_ = valid_;
        out.top_dropped_ = top_dropped_;
        return out;
    }

    /// Termwise antiderivative with constant 0; the input's top coefficient
    /// has nowhere to go and is dropped (flagged via top_dropped).
    TruncatedSeries integrated() const {
        TruncatedSeries out(order_);
        for (int k = 0; k < order_; ++k)
            out.coeffs_[static_cast<size_t>(k + 1)] =
                coeffs_[static_cast<size_t>(k)].scaled(Rational(BigInt(1), BigInt(k + 1)));
        out.valid_ = std::min(valid_ + 1, order_);
        out.top_dropped_ = top_dropped_ || !coeffs_[static_cast<size_t>(order_)].is_zero();
        return out;
    }

    /// Termwise derivative. The coefficient of t^N would need the unknown
    /// coefficient of t^{N+1}, so the result is valid only to N-1.
    TruncatedSeries differentiated() const {
        TruncatedSeries out(order_);
        for (int k = 1; k <= order_; ++k)
            out.coeffs_[static_cast<size_t>(k - 1)] =
                coeffs_[static_cast<size_t>(k)].scaled(Rational(static_cast<std::int64_t>(k)));
        out.valid_ = std::min(valid_, order_) - 1;
        out.top_dropped_ = top_dropped_;
        return out;
    }

    /// Multiplication by t^count.
    TruncatedSeries shifted_up(int count = 1) const {
        if (count < 0)
            throw std::invalid_argument("negative shift");
        TruncatedSeries out(order_);
        bool dropped = false;
        for (int k = order_; k >= 0; --k) {
            if (k + count > order_) {
                dropped = dropped || !coeffs_[static_cast<size_t>(k)].is_zero();
                continue;
            }
            out.coeffs_[static_cast<size_t>(k + count)] = coeffs_[static_cast<size_t>(k)];
        }
        out.valid_ = std::min(valid_ + count, order_);
        out.top_dropped_ = top_dropped_ || dropped;
        return out;
    }

    /// {a_n} -> {a_n / n!} and back.
    TruncatedSeries egf_scaled() const {
        TruncatedSeries out = *this;
        BigInt fact = 1;
        for (int k = 2; k <= order_; ++k) {
            fact *= k;
            out.coeffs_[static_cast<size_t>(k)] =
                out.coeffs_[static_cast<size_t>(k)].scaled(Rational(BigInt(1), fact));
        }
        return out;
    }

    TruncatedSeries egf_unscaled() const {
        TruncatedSeries out = *this;
        BigInt fact = 1;
        for (int k = 2; k <= order_; ++k) {
            fact *= k;
            out.coeffs_[static_cast<size_t>(k)] =
                out.coeffs_[static_cast<size_t>(k)].scaled(Rational(fact));
        }
        return out;
    }

    /// Canonical rendering "c0 + c1*t + ... + O(t^{N+1})".
    std::string to_string(std::string_view var = "t") const {
        std::string out;
        bool first = true;
        for (int k = 0; k <= order_; ++k) {
            const R& c = coeffs_[static_cast<size_t>(k)];
            if (c.is_zero())
                continue;
            std::string body = c.to_string();
            bool negative = false;
            if (body.find(' ') != std::string::npos) {
                body = "(" + body + ")";
            } else if (body[0] == '-') {
                negative = true;
                body = body.substr(1);
            }
            if (k > 0) {
                std::string tpart(var);
                if (k > 1)
                    tpart += "^" + std::to_string(k);
                body = body == "1" ? tpart : body + "*" + tpart;
            }
            if (first) {
                out += negative ? "-" : "";
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            out += body;
        }
        if (first)
            out += "0";
        out += " + O(";
        out += var;
        out += "^" + std::to_string(order_ + 1) + ")";
        return out;
    }

  private:
    std::vector<R> coeffs_;
    int order_ = 0;
    int valid_ = 0;
    bool top_dropped_ = false;

    static size_t checked_size(int order) {
        if (order < 0)
            throw std::invalid_argument("negative truncation order");
        return static_cast<size_t>(order) + 1;
    }

    void require_same_order(const TruncatedSeries& other) const {
        if (order_ != other.order_)
            throw std::invalid_argument("truncation order mismatch");
    }

    void absorb_metadata(const TruncatedSeries& other) {
        valid_ = std::min(valid_, other.valid_);
        top_dropped_ = top_dropped_ || other.top_dropped_;
    }
};

/// Re-interpret a series over a smaller ring in a bigger one
/// (Rational -> LambdaPoly -> XPoly).
template <CoefficientRing To, CoefficientRing From>
TruncatedSeries<To> lift_series(const TruncatedSeries<From>& s) {
    return TruncatedSeries<To>::build(s.order(), [&](int k) { return To(s.coefficient(k)); })
        .restricted_to(s.valid_order());
}

/// A polynomial in x viewed as a series in x. Requires deg <= order.
TruncatedSeries<LambdaPoly> to_series_in_x(const XPoly& p, int order);

}  // namespace degenkit
