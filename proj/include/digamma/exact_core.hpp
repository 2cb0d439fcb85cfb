#pragma once

// Argument classification and the shift decomposition that moves any
// non-pole rational onto a base in (0, 1] using psi(z+1) = psi(z) + 1/z.

#include "digamma/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace digamma {

/// psi is evaluated at a non-positive integer.
class pole_error : public std::domain_error {
public:
    pole_error() : std::domain_error("digamma pole at non-positive integer") {}
};

enum class ArgumentClass {
    Pole,                // 0, -1, -2, ...
    One,                 // exactly 1
    PositiveInteger,     // 2, 3, ...
    UnitInterval,        // (0, 1)
    GreaterThanOne,      // non-integer > 1
    NegativeNonInteger,  // non-integer < 0
};

inline std::string_view to_string(ArgumentClass c) {
    switch (c) {
        case ArgumentClass::Pole: return "Pole";
        case ArgumentClass::One: return "One";
        case ArgumentClass::PositiveInteger: return "PositiveInteger";
        case ArgumentClass::UnitInterval: return "UnitInterval";
        case ArgumentClass::GreaterThanOne: return "GreaterThanOne";
        case ArgumentClass::NegativeNonInteger: return "NegativeNonInteger";
    }
    return "?";
}

inline ArgumentClass classify(const Rational& r) {
    if (r.is_integer()) {
        if (r.sign() <= 0) return ArgumentClass::Pole;
        return r == Rational(1) ? ArgumentClass::One : ArgumentClass::PositiveInteger;
    }
    if (r.is_negative()) return ArgumentClass::NegativeNonInteger;
    return r < Rational(1) ? ArgumentClass::UnitInterval : ArgumentClass::GreaterThanOne;
}

inline bool is_pole(const Rational& r) { return classify(r) == ArgumentClass::Pole; }

/// psi(input) = psi(base) + correction, with base in (0, 1].
struct ShiftDecomposition {
    Rational base;
    Rational correction;
    Integer step_count;
};

inline ShiftDecomposition shift_decompose(const Rational& r) {
    if (is_pole(r)) throw pole_error();

    const Rational one(1);
    if (r > Rational(0) && r <= one) return {r, Rational(0), Integer(0)};

    ShiftDecomposition out;
    if (r > one) {
        // r = base + n; psi(r) = psi(base) + sum_{k<n} 1/(base + k)
        const Integer n = r.ceil() - 1;
        out.base = r - Rational(n);
        out.step_count = n;
        Rational x = out.base;
        for (Integer k = 0; k < n; ++k, x += one) out.correction += x.reciprocal();
    } else {
        // base = r + n; psi(r) = psi(base) - sum_{k<n} 1/(r + k)
        const Integer n = (-r).floor() + 1;
        out.base = r + Rational(n);
        out.step_count = n;
        Rational x = r;
        for (Integer k = 0; k < n; ++k, x += one) out.correction -= x.reciprocal();
    }
    return out;
}

/// H_n = 1 + 1/2 + ... + 1/n, exactly.
inline Rational harmonic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("harmonic: n must be positive");
    Rational h;
    for (std::int64_t k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

}  // namespace digamma
