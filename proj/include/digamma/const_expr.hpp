#pragma once

/**
 * @file const_expr.hpp
 * @brief Constant expressions over rationals, pi, gamma, sqrt and ln.
 *
 * Grammar:
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := '-' factor | number | 'pi' | 'gamma'
 *           | func '(' expr ')' | '(' expr ')'
 *   func   := 'sqrt' | 'ln' | 'sin' | 'cos' | 'cot'
 *   number := digits ('/' digits)?
 *
 * The tables only need sqrt and ln; sin, cos and cot are accepted so that
 * rendered closed forms parse back. A number token absorbs a directly
 * following "/digits", which is value-identical to division.
 */

#include "digamma/bigreal.hpp"
#include "digamma/numerics.hpp"
#include "digamma/rational.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace digamma {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Evaluation left the real domain (sqrt/ln of a non-positive value, division by zero).
class expr_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ConstExpr {
    enum class Op { Number, Pi, Gamma, Neg, Add, Sub, Mul, Div, Sqrt, Ln, Sin, Cos, Cot };

    Op op = Op::Number;
    Rational value;                  // Op::Number
    std::vector<ConstExpr> args;     // operands, left to right

    static ConstExpr number(Rational r) { return {Op::Number, std::move(r), {}}; }
    static ConstExpr leaf(Op op) { return {op, Rational(0), {}}; }
    static ConstExpr unary(Op op, ConstExpr a) {
        ConstExpr e{op, Rational(0), {}};
        e.args.push_back(std::move(a));
        return e;
    }
    static ConstExpr binary(Op op, ConstExpr a, ConstExpr b) {
        ConstExpr e{op, Rational(0), {}};
        e.args.push_back(std::move(a));
        e.args.push_back(std::move(b));
        return e;
    }
};

namespace detail {

inline const char* function_name(ConstExpr::Op op) {
    switch (op) {
        case ConstExpr::Op::Sqrt: return "sqrt";
        case ConstExpr::Op::Ln: return "ln";
        case ConstExpr::Op::Sin: return "sin";
        case ConstExpr::Op::Cos: return "cos";
        case ConstExpr::Op::Cot: return "cot";
        default: return nullptr;
    }
}

inline int precedence(ConstExpr::Op op) {
    switch (op) {
        case ConstExpr::Op::Add:
        case ConstExpr::Op::Sub: return 1;
        case ConstExpr::Op::Mul:
        case ConstExpr::Op::Div: return 2;
        case ConstExpr::Op::Neg: return 3;
        default: return 4;
    }
}

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ConstExpr parse() {
        ConstExpr e = expr();
        skip_space();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    ConstExpr expr() {
        ConstExpr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = ConstExpr::binary(ConstExpr::Op::Add, std::move(lhs), term());
            } else if (accept('-')) {
                lhs = ConstExpr::binary(ConstExpr::Op::Sub, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    ConstExpr term() {
        ConstExpr lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = ConstExpr::binary(ConstExpr::Op::Mul, std::move(lhs), factor());
            } else if (accept('/')) {
                lhs = ConstExpr::binary(ConstExpr::Op::Div, std::move(lhs), factor());
            } else {
                return lhs;
            }
        }
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    ConstExpr factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('-')) return ConstExpr::unary(ConstExpr::Op::Neg, factor());
        if (accept('(')) {
            ConstExpr inner = expr();
            expect(')');
            return inner;
        }

        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            Integer num(digits());
            Integer den(1);
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                den = Integer(digits());
                if (den.is_zero()) throw parse_error("zero denominator in literal", start);
            }
            return ConstExpr::number(Rational(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "pi") return ConstExpr::leaf(ConstExpr::Op::Pi);
            if (name == "gamma") return ConstExpr::leaf(ConstExpr::Op::Gamma);
            for (auto op : {ConstExpr::Op::Sqrt, ConstExpr::Op::Ln, ConstExpr::Op::Sin, ConstExpr::Op::Cos,
                            ConstExpr::Op::Cot}) {
                if (name == function_name(op)) {
                    expect('(');
                    ConstExpr arg = expr();
                    expect(')');
                    return ConstExpr::unary(op, std::move(arg));
                }
            }
            throw parse_error("unknown identifier '" + std::string(name) + "'", start);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ConstExpr parse_const_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Re-parseable text with only the parentheses precedence requires.
inline std::string to_string(const ConstExpr& e) {
    using Op = ConstExpr::Op;
    auto wrap = [](const ConstExpr& child, int min_prec) {
        const std::string s = to_string(child);
        return detail::precedence(child.op) < min_prec ? "(" + s + ")" : s;
    };
    switch (e.op) {
        case Op::Number: return e.value.is_negative() ? "(" + e.value.str() + ")" : e.value.str();
        case Op::Pi: return "pi";
        case Op::Gamma: return "gamma";
        case Op::Neg: return "-" + wrap(e.args[0], 3);
        case Op::Add: return wrap(e.args[0], 1) + " + " + wrap(e.args[1], 2);
        case Op::Sub: return wrap(e.args[0], 1) + " - " + wrap(e.args[1], 2);
        case Op::Mul: return wrap(e.args[0], 2) + "*" + wrap(e.args[1], 3);
        case Op::Div: return wrap(e.args[0], 2) + "/" + wrap(e.args[1], 3);
        default: return std::string(detail::function_name(e.op)) + "(" + to_string(e.args[0]) + ")";
    }
}

inline BigReal eval_const_expr(const ConstExpr& e, const EvalContext& ctx) {
    using Op = ConstExpr::Op;
    const mpfr_prec_t bits = ctx.bits();
    switch (e.op) {
        case Op::Number: return BigReal(e.value, bits);
        case Op::Pi: return const_pi(ctx);
        case Op::Gamma: return const_gamma(ctx);
        case Op::Neg: return -eval_const_expr(e.args[0], ctx);
        case Op::Add: return eval_const_expr(e.args[0], ctx) + eval_const_expr(e.args[1], ctx);
        case Op::Sub: return eval_const_expr(e.args[0], ctx) - eval_const_expr(e.args[1], ctx);
        case Op::Mul: return eval_const_expr(e.args[0], ctx) * eval_const_expr(e.args[1], ctx);
        case Op::Div: {
            const BigReal d = eval_const_expr(e.args[1], ctx);
            if (d.is_zero()) throw expr_domain_error("division by zero in " + to_string(e));
            return eval_const_expr(e.args[0], ctx) / d;
        }
        case Op::Sqrt: {
            const BigReal x = eval_const_expr(e.args[0], ctx);
            if (x.sign() < 0) throw expr_domain_error("sqrt of negative value in " + to_string(e));
            return sqrt(x);
        }
        case Op::Ln: {
            const BigReal x = eval_const_expr(e.args[0], ctx);
            if (x.sign() <= 0) throw expr_domain_error("ln of non-positive value in " + to_string(e));
            return log(x);
        }
        case Op::Sin: return sin(eval_const_expr(e.args[0], ctx));
        case Op::Cos: return cos(eval_const_expr(e.args[0], ctx));
        case Op::Cot: {
            const BigReal x = eval_const_expr(e.args[0], ctx);
            BigReal s = sin(x);
            if (s.is_zero()) throw expr_domain_error("cot pole in " + to_string(e));
            return cos(x) / s;
        }
    }
    throw std::logic_error("unknown expression node");
}

}  // namespace digamma
