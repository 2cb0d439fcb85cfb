#pragma once

/**
 * @file formulas.hpp
 * @brief Closed forms of psi(p/q) for 1 <= p < q, gcd(p, q) = 1, and the
 *        dispatcher that covers every non-pole rational.
 *
 * All three classical forms are rewritten over one basis; the Gauss form's
 * ln(2 - 2cos(2 pi j/q)) becomes 2 ln 2 + 2 ln sin(pi j/q), since
 * 2 - 2cos(t) = 4 sin^2(t/2).
 */

#include "digamma/closed_form.hpp"
#include "digamma/cosine_combination.hpp"
#include "digamma/exact_core.hpp"
#include "digamma/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace digamma {

namespace detail {

inline void require_unit_fraction(std::int64_t p, std::int64_t q, const char* who) {
    if (q < 2 || p < 1 || p >= q) {
        throw std::invalid_argument(std::string(who) + ": requires 1 <= p < q");
    }
    if (Rational(p, q).denominator() != q) {
        throw std::invalid_argument(std::string(who) + ": requires gcd(p, q) = 1");
    }
}

/// -gamma - ln(n) + sign * (1/2) pi cot(pi p/q)
inline ClosedForm leading_terms(std::int64_t p, std::int64_t q, std::int64_t log_arg, int cot_sign) {
    ClosedForm c;
    c.add(BasisTerm::gamma(), Rational(-1));
    c.add_log_integer(Integer(log_arg), Rational(-1));
    c.add(BasisTerm::pi_cot(Rational(p, q)), Rational(cot_sign, 2));
    return c;
}

/// 2 * sum_{j=1}^{upper} cos(2 pi p j / q) ln sin(pi j / q)
inline void add_log_sin_sum(ClosedForm& c, std::int64_t p, std::int64_t q, std::int64_t upper) {
    for (std::int64_t j = 1; j <= upper; ++j) {
        c.add(BasisTerm::log_sin(Rational(j, q)), CosineCombination::cosine(Rational(p * j, q), Rational(2)));
    }
}

}  // namespace detail

/// -gamma - ln(2q) - (pi/2)cot(pi p/q) + 2 sum_{j=1}^{floor(q/2)} cos(2 pi p j/q) ln sin(pi j/q)
inline ClosedForm murty_saradha(std::int64_t p, std::int64_t q) {
    detail::require_unit_fraction(p, q, "murty_saradha");
    ClosedForm c = detail::leading_terms(p, q, 2 * q, -1);
    detail::add_log_sin_sum(c, p, q, q / 2);
    return canonicalize(c);
}

/**
 * -gamma - ln q - (pi/2)cot(pi p/q) + sum'_{j=1}^{floor(q/2)} cos(2 pi j p/q) ln(2 - 2cos(2 pi j/q)),
 * where the primed sum halves the j = q/2 term when q is even.
 */
inline ClosedForm gauss_1813(std::int64_t p, std::int64_t q) {
    detail::require_unit_fraction(p, q, "gauss_1813");
    ClosedForm c = detail::leading_terms(p, q, q, -1);
    for (std::int64_t j = 1; j <= q / 2; ++j) {
        const Rational weight = (2 * j == q) ? Rational(1, 2) : Rational(1);
        const CosineCombination k = CosineCombination::cosine(Rational(j * p, q), weight);
        // ln(2 - 2cos(2 pi j/q)) = 2 ln 2 + 2 ln sin(pi j/q)
        c.add(BasisTerm::log_prime(Rational(2)), k * Rational(2));
        c.add(BasisTerm::log_sin(Rational(j, q)), k * Rational(2));
    }
    return canonicalize(c);
}

/// -gamma - ln q - (pi/2)cot(pi p/q) + sum_{j=1}^{q-1} cos(2 pi p j/q) ln(2 sin(pi j/q))
inline ClosedForm nielsen(std::int64_t p, std::int64_t q) {
    detail::require_unit_fraction(p, q, "nielsen");
    ClosedForm c = detail::leading_terms(p, q, q, -1);
    for (std::int64_t j = 1; j <= q - 1; ++j) {
        const CosineCombination k = CosineCombination::cosine(Rational(p * j, q));
        c.add(BasisTerm::log_prime(Rational(2)), k);
        c.add(BasisTerm::log_sin(Rational(j, q)), k);
    }
    return canonicalize(c);
}

/**
 * The tabulated variant of murty_saradha whose sum stops at
 * floor((q+1)/2) - 1. Kept verbatim for errata measurement only; the
 * dispatcher never uses it.
 */
inline ClosedForm gr_variant(std::int64_t p, std::int64_t q) {
    detail::require_unit_fraction(p, q, "gr_variant");
    ClosedForm c = detail::leading_terms(p, q, 2 * q, -1);
    detail::add_log_sin_sum(c, p, q, (q + 1) / 2 - 1);
    return canonicalize(c);
}

/// psi((q-p)/q) written with the cotangent of pi p/q.
inline ClosedForm psi_complement(std::int64_t p, std::int64_t q) {
    detail::require_unit_fraction(p, q, "psi_complement");
    ClosedForm c = detail::leading_terms(p, q, 2 * q, +1);
    detail::add_log_sin_sum(c, p, q, q / 2);
    return canonicalize(c);
}

/// psi(-p/q) = q/p + psi((q-p)/q), expanded.
inline ClosedForm psi_negative_unit(std::int64_t p, std::int64_t q) {
    detail::require_unit_fraction(p, q, "psi_negative_unit");
    ClosedForm c = detail::leading_terms(q - p, q, 2 * q, -1);
    c.add(BasisTerm::unit(), Rational(q, p));
    detail::add_log_sin_sum(c, q - p, q, q / 2);
    return canonicalize(c);
}

/**
 * psi(r) for any non-pole rational: shift onto a base in (0, 1], take the
 * base value from murty_saradha (or -gamma at 1), and add the exact shift
 * correction.
 */
inline ClosedForm psi_closed(const Rational& r) {
    const ShiftDecomposition s = shift_decompose(r);  // throws pole_error
    ClosedForm c;
    if (s.base == Rational(1)) {
        c.add(BasisTerm::gamma(), Rational(-1));
    } else {
        const Integer& p = s.base.numerator();
        const Integer& q = s.base.denominator();
        if (q > Integer(INT64_MAX / 4)) throw std::overflow_error("psi_closed: denominator too large");
        c = murty_saradha(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
    }
    c.add(BasisTerm::unit(), s.correction);
    return canonicalize(c);
}

/// psi(1 - r) from psi(r): adds pi cot(pi r).
inline ClosedForm reflect(const ClosedForm& psi_r, const Rational& r) {
    if (r.is_integer()) throw pole_error();
    ClosedForm c = psi_r;
    c.add(BasisTerm::pi_cot(r), Rational(1));
    return canonicalize(c);
}

}  // namespace digamma
