#pragma once

/**
 * @file cosine_combination.hpp
 * @brief Exact coefficients of the form r + sum_i c_i cos(2 pi a_i).
 *
 * Angles are fractions of a full turn. Every stored angle is reduced with
 *   cos(2 pi (x + n)) = cos(2 pi x),  cos(2 pi (1 - x)) = cos(2 pi x),
 *   cos(2 pi (1/2 - x)) = -cos(2 pi x)
 * into the open interval (0, 1/4). The angles whose cosine is rational
 * (0, 1/6, 1/4 after reduction) are folded into the rational part, so a
 * stored cosine is always irrational and its coefficient nonzero.
 *
 * Zero-testing is structural only: the stored cosines still satisfy
 * cyclotomic linear relations, so a nonzero structure may denote 0.
 */

#include "digamma/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace digamma {

namespace detail {

/// cos(2 pi x) as sign * cos(2 pi angle), or as an exact rational.
struct ReducedCosine {
    bool is_rational = false;
    Rational value;  // when is_rational
    Rational angle;  // in (0, 1/4) otherwise
    int sign = 1;
};

inline ReducedCosine reduce_cosine(const Rational& turns) {
    static const Rational half(1, 2);
    static const Rational quarter(1, 4);
    static const Rational sixth(1, 6);

    Rational y = turns.frac();
    if (y > half) y = Rational(1) - y;
    int sign = 1;
    if (y > quarter) {
        y = half - y;
        sign = -1;
    }
    ReducedCosine out;
    out.sign = sign;
    if (y.is_zero()) {
        out.is_rational = true;
        out.value = Rational(sign);
    } else if (y == sixth) {
        out.is_rational = true;
        out.value = Rational(sign, 2);
    } else if (y == quarter) {
        out.is_rational = true;
        out.value = Rational(0);
    } else {
        out.angle = y;
    }
    return out;
}

/// Renders a coefficient magnitude times a factor: "x", "3*x", "(1/2)*x".
inline std::string scaled_plain(const Rational& magnitude, const std::string& factor) {
    if (factor.empty()) return magnitude.str();
    if (magnitude == Rational(1)) return factor;
    if (magnitude.is_integer()) return magnitude.str() + "*" + factor;
    return "(" + magnitude.str() + ")*" + factor;
}

inline std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.str();
    return "\\frac{" + r.numerator().str() + "}{" + r.denominator().str() + "}";
}

inline std::string scaled_latex(const Rational& magnitude, const std::string& factor) {
    if (factor.empty()) return latex_rational(magnitude);
    if (magnitude == Rational(1)) return factor;
    return latex_rational(magnitude) + factor;
}

/// pi * t in LaTeX, e.g. "\frac{3\pi}{8}".
inline std::string latex_pi_multiple(const Rational& t) {
    const Rational a = t.abs();
    std::string body;
    if (a.numerator() == 1) {
        body = "\\pi";
    } else {
        body = a.numerator().str() + "\\pi";
    }
    if (a.denominator() != 1) body = "\\frac{" + body + "}{" + a.denominator().str() + "}";
    return t.is_negative() ? "-" + body : body;
}

/// Joins signed terms as "a - b + c"; an empty list renders as "0".
template <class Render>
std::string join_signed(const std::vector<std::pair<Rational, std::string>>& terms, Render render) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coeff, factor] : terms) {
        const bool neg = coeff.is_negative();
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += render(coeff.abs(), factor);
        first = false;
    }
    return out;
}

}  // namespace detail

class CosineCombination {
public:
    using TermMap = std::map<Rational, Rational>;  // angle -> coefficient

    CosineCombination() = default;
    CosineCombination(Rational r) : rational_(std::move(r)) {}  // NOLINT: implicit by intent
    CosineCombination(std::int64_t r) : rational_(r) {}  // NOLINT

    /// coefficient * cos(2 pi turns)
    static CosineCombination cosine(const Rational& turns, const Rational& coefficient = Rational(1)) {
        CosineCombination c;
        c.add_cosine(turns, coefficient);
        return c;
    }

    const Rational& rational_part() const noexcept { return rational_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_rational() const noexcept { return terms_.empty(); }
    bool is_zero() const noexcept { return terms_.empty() && rational_.is_zero(); }

    void add_cosine(const Rational& turns, const Rational& coefficient) {
        if (coefficient.is_zero()) return;
        const auto rc = detail::reduce_cosine(turns);
        if (rc.is_rational) {
            rational_ += coefficient * rc.value;
            return;
        }
        const Rational c = rc.sign < 0 ? -coefficient : coefficient;
        auto [it, inserted] = terms_.try_emplace(rc.angle, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CosineCombination& operator+=(const CosineCombination& o) {
        rational_ += o.rational_;
        for (const auto& [angle, c] : o.terms_) add_cosine(angle, c);
        return *this;
    }
    CosineCombination& operator-=(const CosineCombination& o) { return *this += -o; }
    CosineCombination& operator*=(const Rational& s) { return *this = *this * s; }
    CosineCombination& operator*=(const CosineCombination& o) { return *this = *this * o; }

    CosineCombination operator-() const { return *this * Rational(-1); }

    friend CosineCombination operator+(CosineCombination a, const CosineCombination& b) { return a += b; }
    friend CosineCombination operator-(CosineCombination a, const CosineCombination& b) { return a -= b; }

    friend CosineCombination operator*(const CosineCombination& a, const Rational& s) {
        if (s.is_zero()) return {};
        CosineCombination out(a.rational_ * s);
        for (const auto& [angle, c] : a.terms_) out.terms_.emplace(angle, c * s);
        return out;
    }
    friend CosineCombination operator*(const Rational& s, const CosineCombination& a) { return a * s; }

    // cos A cos B = (cos(A - B) + cos(A + B)) / 2
    friend CosineCombination operator*(const CosineCombination& a, const CosineCombination& b) {
        CosineCombination out(a.rational_ * b.rational_);
        for (const auto& [angle, c] : b.terms_) out.add_cosine(angle, a.rational_ * c);
        for (const auto& [angle, c] : a.terms_) out.add_cosine(angle, b.rational_ * c);
        const Rational half(1, 2);
        for (const auto& [x, cx] : a.terms_) {
            for (const auto& [y, cy] : b.terms_) {
                const Rational c = cx * cy * half;
                out.add_cosine(x - y, c);
                out.add_cosine(x + y, c);
            }
        }
        return out;
    }

    friend bool operator==(const CosineCombination&, const CosineCombination&) = default;

    /// Plain text, e.g. "1/2 - 2*cos(2*pi*1/5)". Parses under the corpus grammar.
    std::string render_plain() const {
        return detail::join_signed(signed_terms(false), detail::scaled_plain);
    }

    std::string render_latex() const {
        return detail::join_signed(signed_terms(true), detail::scaled_latex);
    }

private:
    std::vector<std::pair<Rational, std::string>> signed_terms(bool latex) const {
        std::vector<std::pair<Rational, std::string>> out;
        if (!rational_.is_zero()) out.emplace_back(rational_, "");
        for (const auto& [angle, c] : terms_) {
            std::string f = latex ? "\\cos\\left(" + detail::latex_pi_multiple(angle * Rational(2)) + "\\right)"
                                  : "cos(2*pi*" + angle.str() + ")";
            out.emplace_back(c, std::move(f));
        }
        return out;
    }

    Rational rational_;
    TermMap terms_;
};

}  // namespace digamma
