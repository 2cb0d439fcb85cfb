// Prints psi(p/q) for every reduced p/q with q <= 6, exactly and to 30 digits.

#include "digamma/digamma.hpp"

#include <iostream>

int main() {
    const digamma::EvalContext ctx(30);
    for (std::int64_t q = 1; q <= 6; ++q) {
        for (std::int64_t p = 1; p <= q; ++p) {
            const digamma::Rational z(p, q);
            if (z.denominator() != q) continue;
            const auto form = digamma::psi_closed(z);
            std::cout << "psi(" << z << ") = " << digamma::render(form) << "\n    = "
                      << digamma::eval_closed_form(form, ctx).to_decimal(ctx.digits) << '\n';
        }
    }
}
