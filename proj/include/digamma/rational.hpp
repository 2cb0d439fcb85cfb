#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Values are always stored in lowest terms with a positive denominator;
 * zero is 0/1. Nothing here ever rounds.
 */

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace digamma {

using Integer = boost::multiprecision::mpz_int;

/// Thrown for malformed rational text and zero denominators.
class rational_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by intent
    Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    const Integer& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_negative() const noexcept { return num_ < 0; }
    bool is_positive() const noexcept { return num_ > 0; }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const { return from_reduced(-num_, den_); }
    Rational abs() const { return from_reduced(boost::multiprecision::abs(num_), den_); }
    Rational reciprocal() const {
        if (is_zero()) throw rational_error("undefined rational");
        return Rational(den_, num_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const Integer lhs = a.num_ * b.den_;
        const Integer rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Largest integer not greater than the value.
    Integer floor() const {
        Integer q = num_ / den_;  // truncates toward zero
        if (num_ < 0 && q * den_ != num_) q -= 1;
        return q;
    }
    Integer ceil() const { return -(-*this).floor(); }

    /// Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from_reduced(Integer n, Integer d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw rational_error("undefined rational");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

/// Lowest-terms fraction numerator/denominator; throws on a zero denominator.
inline Rational reduce(const Integer& numerator, const Integer& denominator) {
    return Rational(numerator, denominator);
}

/**
 * Parses "[-]digits[/digits]", e.g. "-7/3" or "5". Surrounding whitespace is
 * ignored; anything else is rejected.
 */
inline Rational parse_rational(std::string_view text) {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);

    const std::string original(text);
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    auto take_digits = [&](std::string_view& s) {
        std::size_t n = 0;
        while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) ++n;
        std::string digits(s.substr(0, n));
        s.remove_prefix(n);
        return digits;
    };
    const std::string num = take_digits(text);
    if (num.empty()) throw rational_error("malformed rational '" + original + "'");
    std::string den = "1";
    if (!text.empty() && text.front() == '/') {
        text.remove_prefix(1);
        den = take_digits(text);
        if (den.empty()) throw rational_error("malformed rational '" + original + "'");
    }
    if (!text.empty()) throw rational_error("malformed rational '" + original + "'");

    Integer n(num);
    if (negative) n = -n;
    return Rational(n, Integer(den));
}

}  // namespace digamma
