#include "degenkit/x_poly.hpp"

#include <stdexcept>

namespace degenkit {

namespace {
const LambdaPoly kZero{};
}

XPoly::XPoly(LambdaPoly constant) {
    if (!constant.is_zero())
        coeffs_.push_back(std::move(constant));
}

XPoly::XPoly(std::vector<LambdaPoly> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

XPoly XPoly::x() {
    return monomial(LambdaPoly::one(), 1);
}

XPoly XPoly::monomial(LambdaPoly coefficient, int degree) {
    if (degree < 0)
        throw std::invalid_argument("monomial with negative degree");
    if (coefficient.is_zero())
        return {};
    std::vector<LambdaPoly> c(static_cast<size_t>(degree) + 1);
    c.back() = std::move(coefficient);
    return XPoly(std::move(c));
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

const LambdaPoly& XPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

XPoly XPoly::operator-() const {
    XPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

XPoly operator*(const XPoly& lhs, const XPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<LambdaPoly> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return XPoly(std::move(out));
}

XPoly XPoly::scaled(const LambdaPoly& factor) const {
    if (factor.is_zero())
        return {};
    XPoly out = *this;
    for (auto& c : out.coeffs_)
        c = c * factor;
    return out;
}

XPoly XPoly::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<LambdaPoly> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = coeffs_[k].scaled(Rational(static_cast<std::int64_t>(k)));
    return XPoly(std::move(out));
}

XPoly XPoly::antiderivative_from_zero() const {
    if (is_zero())
        return {};
    std::vector<LambdaPoly> out(coeffs_.size() + 1);
    for (size_t k = 0; k < coeffs_.size(); ++k)
        out[k + 1] = coeffs_[k].scaled(Rational(BigInt(1), BigInt(k + 1)));
    return XPoly(std::move(out));
}

XPoly XPoly::divided_by_x() const {
    if (is_zero())
        return {};
    if (!coeffs_[0].is_zero())
        throw std::domain_error("not divisible by x");
    std::vector<LambdaPoly> out(coeffs_.begin() + 1, coeffs_.end());
    return XPoly(std::move(out));
}

LambdaPoly XPoly::eval_x(const Rational& value) const {
    LambdaPoly acc;
    for (size_t k = coeffs_.size(); k-- > 0;)
        acc = acc.scaled(value) + coeffs_[k];
    return acc;
}

Rational XPoly::eval(const Rational& x_value, const Rational& lambda_value) const {
    return eval_x(x_value).eval(lambda_value);
}

std::string XPoly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const LambdaPoly& c = coeff(k);
        if (c.is_zero())
            continue;

        std::string xpart;
        if (k == 1)
            xpart = "x";
        else if (k >= 2)
            xpart = "x^" + std::to_string(k);

        auto term = c.single_term();
        if (!term) {
            // Multi-term coefficient: inline at degree 0, parenthesized with x^k.
            std::string body = k == 0 ? c.to_string() : "(" + c.to_string() + ")*" + xpart;
            out += first ? body : " + " + body;
            first = false;
            continue;
        }

        auto [ldeg, r] = *term;
        std::string lpart;
        if (ldeg == 1)
            lpart = "L";
        else if (ldeg >= 2)
            lpart = "L^" + std::to_string(ldeg);

        Rational a = r.abs();
        std::string body;
        if (!a.is_one() || (lpart.empty() && xpart.empty()))
            body = a.to_string();
        for (const std::string& piece : {lpart, xpart}) {
            if (piece.empty())
                continue;
            if (!body.empty())
                body += "*";
            body += piece;
        }

        if (first) {
            out += r.is_negative() ? "-" : "";
            first = false;
        } else {
            out += r.is_negative() ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

}  // namespace degenkit
