#include "degenkit/lambda_poly.hpp"

#include <cctype>
#include <stdexcept>

namespace degenkit {

namespace {
const Rational kZero{};
}

LambdaPoly::LambdaPoly(Rational constant) {
    if (!constant.is_zero())
        coeffs_.push_back(std::move(constant));
}

LambdaPoly::LambdaPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

LambdaPoly LambdaPoly::lambda() {
    return monomial(Rational::one(), 1);
}

LambdaPoly LambdaPoly::monomial(Rational coefficient, int degree) {
    if (degree < 0)
        throw std::invalid_argument("monomial with negative degree");
    if (coefficient.is_zero())
        return {};
    std::vector<Rational> c(static_cast<size_t>(degree) + 1);
    c.back() = std::move(coefficient);
    return LambdaPoly(std::move(c));
}

void LambdaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

const Rational& LambdaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

std::optional<std::pair<int, Rational>> LambdaPoly::single_term() const {
    std::optional<std::pair<int, Rational>> found;
    for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k) {
        if (coeffs_[static_cast<size_t>(k)].is_zero())
            continue;
        if (found)
            return std::nullopt;
        found = {k, coeffs_[static_cast<size_t>(k)]};
    }
    return found;
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

LambdaPoly operator*(const LambdaPoly& lhs, const LambdaPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly LambdaPoly::scaled(const Rational& factor) const {
    if (factor.is_zero())
        return {};
    LambdaPoly out = *this;
    for (auto& c : out.coeffs_)
        c *= factor;
    return out;
}

Rational LambdaPoly::eval(const Rational& value) const {
    Rational acc;
    for (size_t k = coeffs_.size(); k-- > 0;)
        acc = acc * value + coeffs_[k];
    return acc;
}

std::string LambdaPoly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rational& c = coeff(k);
        if (c.is_zero())
            continue;
        std::string body;
        if (k == 0) {
            body = c.abs().to_string();
        } else {
            std::string mono = (k == 1) ? "L" : "L^" + std::to_string(k);
            Rational a = c.abs();
            body = a.is_one() ? mono : a.to_string() + "*" + mono;
        }
        if (first) {
            out += c.is_negative() ? "-" : "";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

LambdaPoly LambdaPoly::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty polynomial literal");

    std::vector<Rational> acc;
    auto accumulate = [&acc](int deg, Rational c) {
        if (static_cast<int>(acc.size()) <= deg)
            acc.resize(static_cast<size_t>(deg) + 1);
        acc[static_cast<size_t>(deg)] += c;
    };

    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-')
            ++j;
        std::string_view term(s.data() + i, j - i);
        if (term.empty())
            throw std::invalid_argument("malformed polynomial literal: " + s);

        Rational coeff;
        int deg = 0;
        size_t lpos = term.find('L');
        if (lpos == std::string_view::npos) {
            coeff = Rational::parse(term);
        } else {
            std::string_view head = term.substr(0, lpos);
            if (!head.empty() && head.back() == '*')
                head.remove_suffix(1);
            coeff = head.empty() ? Rational::one() : Rational::parse(head);
            std::string_view tail = term.substr(lpos + 1);
            if (tail.empty()) {
                deg = 1;
            } else {
                if (tail[0] != '^' || tail.size() < 2)
                    throw std::invalid_argument("malformed polynomial literal: " + s);
                for (size_t p = 1; p < tail.size(); ++p)
                    if (tail[p] < '0' || tail[p] > '9')
                        throw std::invalid_argument("malformed polynomial literal: " + s);
                deg = std::stoi(std::string(tail.substr(1)));
            }
        }
        if (sign < 0)
            coeff = -coeff;
        accumulate(deg, std::move(coeff));
        i = j;
    }
    return LambdaPoly(std::move(acc));
}

}  // namespace degenkit
