#pragma once

/**
 * @file bigreal.hpp
 * @brief Binary multiprecision reals (MPFR) carrying a decimal precision.
 *
 * Every operation rounds to nearest at the result precision, which is the
 * larger of the operand precisions. EvalContext fixes the precision used by
 * one evaluation: D requested digits plus a fixed number of guard digits.
 */

#include "digamma/rational.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace digamma {

struct EvalContext {
    static constexpr int kGuardDigits = 15;

    int digits = 50;
    int guard = kGuardDigits;

    explicit EvalContext(int d = 50) : digits(d) {
        if (d < 15) throw std::invalid_argument("precision must be at least 15 digits");
    }

    int working_digits() const noexcept { return digits + guard; }

    /// Binary precision covering the working digits.
    mpfr_prec_t bits() const noexcept {
        return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.3219280948873623)) + 8;
    }
};

class BigReal {
public:
    explicit BigReal(mpfr_prec_t bits = 64) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    BigReal(const Rational& r, mpfr_prec_t bits) : BigReal(bits) { assign(r); }
    BigReal(long n, mpfr_prec_t bits) : BigReal(bits) { mpfr_set_si(v_, n, MPFR_RNDN); }
    BigReal(const std::string& decimal, mpfr_prec_t bits) : BigReal(bits) {
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
            throw std::invalid_argument("malformed decimal '" + decimal + "'");
        }
    }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_ptr get() noexcept { return v_; }

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

    /// 10^exponent at the given precision.
    static BigReal pow10(long exponent, mpfr_prec_t bits) {
        BigReal r(bits);
        mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(std::labs(exponent)), MPFR_RNDN);
        if (exponent < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_add); }
    friend BigReal operator-(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_sub); }
    friend BigReal operator*(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_mul); }
    friend BigReal operator/(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_div); }
    BigReal operator-() const { return unary(*this, mpfr_neg); }

    BigReal& operator+=(const BigReal& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator-=(const BigReal& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator*=(const BigReal& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator/=(const BigReal& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    friend BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
    friend BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
    friend BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
    friend BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
    friend BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
    friend BigReal cot(const BigReal& x) { return unary(x, mpfr_cot); }

    /**
     * Decimal text with exactly `digits` significant digits, rounded to
     * nearest: "-1.96351002602142347944097633299", "0.577215664901533",
     * or "1.5e+60" style when the magnitude is far from 1. Zero is "0".
     */
    std::string to_decimal(int digits) const {
        if (digits < 1) throw std::invalid_argument("to_decimal: digits must be positive");
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
        if (is_zero()) return "0";

        mpfr_exp_t exp10 = 0;
        char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
        std::string mant(raw);
        mpfr_free_str(raw);
        std::string sign_str;
        if (mant.front() == '-') {
            sign_str = "-";
            mant.erase(0, 1);
        }
        // value = 0.mant * 10^exp10
        const long e = static_cast<long>(exp10);
        const long n = static_cast<long>(mant.size());
        if (e > 0 && e < n) return sign_str + mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
        if (e <= 0 && e > -5) return sign_str + "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
        std::string out = sign_str + mant.substr(0, 1);
        if (n > 1) out += "." + mant.substr(1);
        const long sci = e - 1;
        out += sci < 0 ? "e-" : "e+";
        out += std::to_string(std::labs(sci));
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigReal& x) {
        const int d = static_cast<int>(static_cast<double>(x.precision()) * 0.30102999566398120);
        return os << x.to_decimal(std::max(d, 1));
    }

private:
    void assign(const Rational& r) {
        mpq_t q;
        mpq_init(q);
        mpq_set_num(q, r.numerator().backend().data());
        mpq_set_den(q, r.denominator().backend().data());
        mpfr_set_q(v_, q, MPFR_RNDN);
        mpq_clear(q);
    }

    template <class Fn>
    static BigReal binary(const BigReal& a, const BigReal& b, Fn fn) {
        BigReal r(std::max(a.precision(), b.precision()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    template <class Fn>
    static BigReal unary(const BigReal& a, Fn fn) {
        BigReal r(a.precision());
        fn(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

}  // namespace digamma
