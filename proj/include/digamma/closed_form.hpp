#pragma once

/**
 * @file closed_form.hpp
 * @brief Exact symbolic values: linear combinations of basis constants with
 *        cosine-combination coefficients.
 *
 * Basis constants:
 *   Unit         1
 *   Gamma        the Euler-Mascheroni constant
 *   PiCot(x)     pi * cot(pi x),   canonical x in (0, 1/2)
 *   LogPrime(p)  ln p,             p prime
 *   LogSin(x)    ln sin(pi x),     canonical x in (0, 1/2)
 *
 * PiCot(1/2) and LogSin(1/2) are exactly zero and never survive
 * canonicalization. Logarithms of composite integers are split over primes.
 */

#include "digamma/cosine_combination.hpp"
#include "digamma/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace digamma {

enum class BasisKind { Unit, Gamma, PiCot, LogPrime, LogSin };

struct BasisTerm {
    BasisKind kind = BasisKind::Unit;
    Rational arg;  // angle for PiCot/LogSin, the integer for LogPrime, 0 otherwise

    static BasisTerm unit() { return {BasisKind::Unit, Rational(0)}; }
    static BasisTerm gamma() { return {BasisKind::Gamma, Rational(0)}; }
    static BasisTerm pi_cot(Rational x) { return {BasisKind::PiCot, std::move(x)}; }
    static BasisTerm log_prime(Rational p) { return {BasisKind::LogPrime, std::move(p)}; }
    static BasisTerm log_sin(Rational x) { return {BasisKind::LogSin, std::move(x)}; }

    friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
    friend std::strong_ordering operator<=>(const BasisTerm& a, const BasisTerm& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.arg <=> b.arg;
    }
};

/// Prime factorization by trial division, ascending primes with multiplicity.
inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    if (n < 1) throw std::domain_error("factorize: argument must be positive");
    std::vector<std::pair<Integer, unsigned>> out;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(Integer(2));
    for (Integer p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

class ClosedForm {
public:
    using TermMap = std::map<BasisTerm, CosineCombination>;

    ClosedForm() = default;

    static ClosedForm rational(const Rational& r) {
        ClosedForm c;
        c.add(BasisTerm::unit(), r);
        return c;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of a basis term; zero when absent.
    CosineCombination coefficient(const BasisTerm& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? CosineCombination() : it->second;
    }

    /// Accumulates without canonicalizing; zero sums are erased.
    ClosedForm& add(const BasisTerm& t, const CosineCombination& coeff) {
        if (coeff.is_zero()) return *this;
        auto [it, inserted] = terms_.try_emplace(t, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    /// coeff * ln(n) for a positive integer n, split over prime logarithms.
    ClosedForm& add_log_integer(const Integer& n, const CosineCombination& coeff) {
        for (const auto& [p, e] : factorize(n)) {
            add(BasisTerm::log_prime(Rational(p)), coeff * Rational(static_cast<std::int64_t>(e)));
        }
        return *this;
    }

    ClosedForm& operator+=(const ClosedForm& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }

    friend ClosedForm operator*(const ClosedForm& a, const Rational& s) {
        ClosedForm out;
        if (s.is_zero()) return out;
        for (const auto& [t, c] : a.terms_) out.terms_.emplace(t, c * s);
        return out;
    }

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

private:
    TermMap terms_;
};

/**
 * Reduces every basis argument to its canonical range, folds signs into
 * coefficients, splits composite logarithms and drops zero terms.
 * Idempotent and value-preserving.
 */
inline ClosedForm canonicalize(const ClosedForm& c) {
    static const Rational half(1, 2);
    ClosedForm out;
    for (const auto& [term, coeff] : c.terms()) {
        switch (term.kind) {
            case BasisKind::Unit:
            case BasisKind::Gamma:
                out.add(term, coeff);
                break;
            case BasisKind::PiCot: {
                if (term.arg.is_integer()) throw std::domain_error("cot pole in closed form");
                Rational x = term.arg.frac();
                CosineCombination k = coeff;
                if (x > half) {
                    x = Rational(1) - x;  // cot(pi (1 - x)) = -cot(pi x)
                    k = -k;
                }
                if (x != half) out.add(BasisTerm::pi_cot(x), k);
                break;
            }
            case BasisKind::LogPrime: {
                if (!term.arg.is_integer() || term.arg < Rational(1)) {
                    throw std::domain_error("logarithm of non-positive or non-integer value in closed form");
                }
                out.add_log_integer(term.arg.numerator(), coeff);
                break;
            }
            case BasisKind::LogSin: {
                if (term.arg <= Rational(0) || term.arg >= Rational(1)) {
                    throw std::domain_error("ln sin(pi x) requires 0 < x < 1");
                }
                Rational x = term.arg;
                if (x > half) x = Rational(1) - x;  // sin(pi (1 - x)) = sin(pi x)
                if (x != half) out.add(BasisTerm::log_sin(x), coeff);
                break;
            }
        }
    }
    return out;
}

/// scalar_a * a + scalar_b * b, canonicalized.
inline ClosedForm combine(const ClosedForm& a, const ClosedForm& b, const Rational& scalar_a,
                          const Rational& scalar_b) {
    ClosedForm sum = a * scalar_a;
    sum += b * scalar_b;
    return canonicalize(sum);
}

enum class RenderFormat { Plain, Latex };

namespace detail {

inline std::string basis_plain(const BasisTerm& t) {
    switch (t.kind) {
        case BasisKind::Unit: return "";
        case BasisKind::Gamma: return "gamma";
        case BasisKind::PiCot: return "pi*cot(pi*" + t.arg.str() + ")";
        case BasisKind::LogPrime: return "ln(" + t.arg.str() + ")";
        case BasisKind::LogSin: return "ln(sin(pi*" + t.arg.str() + "))";
    }
    return "";
}

inline std::string basis_latex(const BasisTerm& t) {
    switch (t.kind) {
        case BasisKind::Unit: return "";
        case BasisKind::Gamma: return "\\gamma";
        case BasisKind::PiCot: return "\\pi\\cot\\left(" + latex_pi_multiple(t.arg) + "\\right)";
        case BasisKind::LogPrime: return "\\ln " + t.arg.str();
        case BasisKind::LogSin: return "\\ln\\sin\\left(" + latex_pi_multiple(t.arg) + "\\right)";
    }
    return "";
}

}  // namespace detail

/**
 * Deterministic text in basis order (Unit, Gamma, PiCot, LogPrime, LogSin,
 * each by ascending argument). Plain output is valid input for the
 * constant-expression parser.
 */
inline std::string render(const ClosedForm& c, RenderFormat format = RenderFormat::Plain) {
    if (c.is_zero()) return "0";
    const bool latex = format == RenderFormat::Latex;
    std::string out;
    bool first = true;
    for (const auto& [term, coeff] : c.terms()) {
        const std::string factor = latex ? detail::basis_latex(term) : detail::basis_plain(term);
        std::string piece;
        bool negative = false;
        if (coeff.is_rational()) {
            const Rational& r = coeff.rational_part();
            negative = r.is_negative();
            piece = latex ? detail::scaled_latex(r.abs(), factor) : detail::scaled_plain(r.abs(), factor);
        } else if (latex) {
            piece = "\\left(" + coeff.render_latex() + "\\right)" + factor;
        } else {
            piece = "(" + coeff.render_plain() + ")" + (factor.empty() ? "" : "*" + factor);
        }
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += piece;
        first = false;
    }
    return out;
}

}  // namespace digamma
