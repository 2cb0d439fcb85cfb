#pragma once

/**
 * @file numerics.hpp
 * @brief Numeric evaluation of closed forms and two independent digamma
 *        oracles: the partial-fraction series and the asymptotic expansion.
 *
 * Euler's constant is not stored anywhere; it is -psi(1) as computed by the
 * asymptotic oracle.
 */

#include "digamma/bigreal.hpp"
#include "digamma/closed_form.hpp"
#include "digamma/cosine_combination.hpp"
#include "digamma/exact_core.hpp"
#include "digamma/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace digamma {

/// B_{2k} as an exact rational, k >= 1.
inline Rational bernoulli_even(int k) {
    if (k < 1) throw std::invalid_argument("bernoulli_even: k must be positive");
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};  // B_0, B_1, B_2, ...
    const std::size_t want = 2 * static_cast<std::size_t>(k);

    std::lock_guard lock(mu);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    while (table.size() <= want) {
        const std::size_t m = table.size();
        if (m % 2 == 1 && m > 1) {
            table.emplace_back(0);
            continue;
        }
        Rational acc;
        Integer binom = 1;  // C(m+1, j)
        for (std::size_t j = 0; j < m; ++j) {
            if (!table[j].is_zero()) acc += Rational(binom) * table[j];
            binom = binom * static_cast<std::int64_t>(m + 1 - j) / static_cast<std::int64_t>(j + 1);
        }
        table.push_back(-acc / Rational(static_cast<std::int64_t>(m + 1)));
    }
    return table[want];
}

namespace detail {

/// Per-precision cache of a constant; concurrent readers, one writer.
template <class Compute>
BigReal cached_constant(std::map<mpfr_prec_t, BigReal>& cache, std::shared_mutex& mu, mpfr_prec_t bits,
                        Compute compute) {
    {
        std::shared_lock read(mu);
        if (auto it = cache.find(bits); it != cache.end()) return it->second;
    }
    BigReal value = compute();
    std::unique_lock write(mu);
    return cache.try_emplace(bits, std::move(value)).first->second;
}

}  // namespace detail

inline BigReal const_pi(const EvalContext& ctx) {
    static std::map<mpfr_prec_t, BigReal> cache;
    static std::shared_mutex mu;
    return detail::cached_constant(cache, mu, ctx.bits(), [&] {
        BigReal pi(ctx.bits());
        mpfr_const_pi(pi.get(), MPFR_RNDN);
        return pi;
    });
}

/**
 * psi(r) by shifting upward with psi(x) = psi(x + n) - sum_{k<n} 1/(x + k)
 * until x >= max(20, D), then
 *   psi(x) ~ ln x - 1/(2x) - sum_{k>=1} B_{2k} / (2k x^{2k}).
 * The divergent tail is cut at the first term below 10^-(working digits + 10)
 * or at the first term that grows.
 */
inline BigReal oracle_psi_asymptotic(const Rational& r, const EvalContext& ctx) {
    if (is_pole(r)) throw pole_error();
    const mpfr_prec_t bits = ctx.bits();

    const Rational x0(static_cast<std::int64_t>(std::max(20, ctx.digits)));
    Rational x = r;
    Rational shift_sum;
    while (x < x0) {
        shift_sum += x.reciprocal();
        x += Rational(1);
    }

    const BigReal X(x, bits);
    BigReal result = log(X) - BigReal(1, bits) / (BigReal(2, bits) * X);

    const BigReal eps = BigReal::pow10(-(ctx.working_digits() + 10), bits);
    const BigReal inv_sq = BigReal(1, bits) / (X * X);
    BigReal power = inv_sq;
    BigReal previous(bits);
    for (int k = 1;; ++k) {
        BigReal term = BigReal(bernoulli_even(k) / Rational(2 * k), bits) * power;
        const BigReal mag = abs(term);
        if (k > 1 && mag > previous) break;
        result -= term;
        if (mag < eps) break;
        previous = mag;
        power *= inv_sq;
    }
    return result - BigReal(shift_sum, bits);
}

inline BigReal const_gamma(const EvalContext& ctx) {
    static std::map<mpfr_prec_t, BigReal> cache;
    static std::shared_mutex mu;
    return detail::cached_constant(cache, mu, ctx.bits(), [&] { return -oracle_psi_asymptotic(Rational(1), ctx); });
}

struct SeriesEstimate {
    BigReal value;
    BigReal tail_bound;  // |value - psi(r)| <= tail_bound
};

/**
 * psi(z) = -gamma - 1/z + sum_{n>=1} z / (n (z + n)), truncated after
 * `terms` summands. The argument is first moved onto its base z in (0, 1]
 * by the exact recurrence; the omitted tail is positive and below
 * z * sum_{n>N} 1/n^2 < z/N. The bound also absorbs accumulated rounding.
 */
inline SeriesEstimate oracle_psi_series(const Rational& r, std::uint64_t terms, const EvalContext& ctx) {
    if (is_pole(r)) throw pole_error();
    const Integer min_terms = 10 * r.abs().ceil();
    if (Integer(terms) < min_terms) throw std::invalid_argument("oracle_psi_series: too few terms for argument");

    const auto shift = shift_decompose(r);
    const mpfr_prec_t bits = ctx.bits();
    const BigReal a(Rational(shift.base.numerator()), bits);
    const BigReal c(Rational(shift.base.denominator()), bits);

    // z / (n (z + n)) = a / (n (a + n c)) with z = a/c
    BigReal sum(bits), term(bits), den(bits);
    for (std::uint64_t n = 1; n <= terms; ++n) {
        mpfr_mul_ui(den.get(), c.get(), n, MPFR_RNDN);
        mpfr_add(den.get(), den.get(), a.get(), MPFR_RNDN);
        mpfr_mul_ui(den.get(), den.get(), n, MPFR_RNDN);
        mpfr_div(term.get(), a.get(), den.get(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    const BigReal z(shift.base, bits);
    BigReal value = sum - const_gamma(ctx) - BigReal(1, bits) / z + BigReal(shift.correction, bits);

    BigReal rounding = BigReal::pow10(-(ctx.working_digits() - 2), bits);
    mpfr_mul_ui(rounding.get(), rounding.get(), terms + 1, MPFR_RNDU);
    BigReal bound = z / BigReal(Rational(Integer(terms)), bits) + rounding * (abs(value) + BigReal(1, bits));
    return {std::move(value), std::move(bound)};
}

/// r + sum c_i cos(2 pi a_i)
inline BigReal eval_cosine_combination(const CosineCombination& cc, const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    BigReal out(cc.rational_part(), bits);
    if (cc.is_rational()) return out;
    const BigReal two_pi = const_pi(ctx) * BigReal(2, bits);
    for (const auto& [angle, coeff] : cc.terms()) {
        out += BigReal(coeff, bits) * cos(two_pi * BigReal(angle, bits));
    }
    return out;
}

inline BigReal eval_basis(const BasisTerm& t, const EvalContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    switch (t.kind) {
        case BasisKind::Unit: return BigReal(1, bits);
        case BasisKind::Gamma: return const_gamma(ctx);
        case BasisKind::PiCot: {
            const BigReal pi = const_pi(ctx);
            return pi * cot(pi * BigReal(t.arg, bits));
        }
        case BasisKind::LogPrime: return log(BigReal(t.arg, bits));
        case BasisKind::LogSin: return log(sin(const_pi(ctx) * BigReal(t.arg, bits)));
    }
    throw std::logic_error("unknown basis term");
}

inline BigReal eval_closed_form(const ClosedForm& c, const EvalContext& ctx) {
    BigReal sum(ctx.bits());
    for (const auto& [term, coeff] : c.terms()) {
        sum += eval_cosine_combination(coeff, ctx) * eval_basis(term, ctx);
    }
    return sum;
}

/// 10^-(digits - 10), the agreement tolerance used throughout.
inline BigReal agreement_tolerance(const EvalContext& ctx) {
    return BigReal::pow10(-(ctx.digits - 10), ctx.bits());
}

inline bool equals_numeric(const ClosedForm& a, const ClosedForm& b, int digits) {
    const EvalContext ctx(digits);
    return abs(eval_closed_form(a, ctx) - eval_closed_form(b, ctx)) < agreement_tolerance(ctx);
}

}  // namespace digamma
