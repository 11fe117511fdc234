// Recursive-descent parser for scalar expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 't' | '(' expr ')'

#include <cctype>
#include <utility>

#include "semieuler/scalars.hpp"

namespace semieuler {

namespace {

struct Fraction {
    Poly num;
    Poly den;
};

class ExprParser {
public:
    ExprParser(BaseField field, std::string_view text, bool allow_variable)
        : field_(field), text_(text), allow_variable_(allow_variable)
    {
    }

    Fraction parse()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("empty expression");
        Fraction f = expr();
        skip_ws();
        if (pos_ < text_.size())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return f;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::ParseError,
                    what + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
    }

private:
    Poly one() const { return Poly::constant(field_, 1); }

    void reduce(Fraction& f) const
    {
        if (f.num.is_zero()) {
            f.den = one();
            return;
        }
        const Poly g = gcd(f.num, f.den);
        if (!g.is_one()) {
            f.num = f.num / g;
            f.den = f.den / g;
        }
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Fraction expr()
    {
        Fraction acc = term();
        while (true) {
            if (accept('+')) {
                Fraction rhs = term();
                acc = {acc.num * rhs.den + rhs.num * acc.den, acc.den * rhs.den};
            } else if (accept('-')) {
                Fraction rhs = term();
                acc = {acc.num * rhs.den - rhs.num * acc.den, acc.den * rhs.den};
            } else {
                break;
            }
            reduce(acc);
        }
        return acc;
    }

    Fraction term()
    {
        Fraction acc = unary();
        while (true) {
            if (accept('*')) {
                Fraction rhs = unary();
                acc = {acc.num * rhs.num, acc.den * rhs.den};
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Fraction rhs = unary();
                if (rhs.num.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = {acc.num * rhs.den, acc.den * rhs.num};
            } else {
                break;
            }
            reduce(acc);
        }
        return acc;
    }

    Fraction unary()
    {
        if (accept('-')) {
            Fraction f = unary();
            return {-f.num, f.den};
        }
        if (accept('+'))
            return unary();
        return power();
    }

    Fraction power()
    {
        Fraction base = primary();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected a nonnegative integer exponent");
            const std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 4)
                fail("exponent too large");
            const auto e = static_cast<unsigned>(std::stoul(digits));
            base = {base.num.pow(e), base.den.pow(e)};
        }
        return base;
    }

    Fraction primary()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Fraction f = expr();
            if (!accept(')'))
                fail("expected ')'");
            return f;
        }
        if (c == 't') {
            if (!allow_variable_)
                fail("variable 't' not allowed here");
            ++pos_;
            return {Poly::variable(field_), one()};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            const mpz_class value(std::string(text_.substr(start, pos_ - start)), 10);
            return {Poly(FieldElem(field_, mpq_class(value))), one()};
        }
        fail(std::string("unexpected '") + c + "'");
    }

    BaseField field_;
    std::string_view text_;
    bool allow_variable_;
    std::size_t pos_ = 0;
};

}  // namespace

LocalScalar parse_scalar(const RingPtr& ring, std::string_view text)
{
    ExprParser parser(ring->field(), text, true);
    Fraction f = parser.parse();
    if (!f.num.is_zero() && f.den.eval(ring->base_point()).is_zero())
        throw Error(ErrorCode::ParseError, "denominator of \"" + std::string(text) +
                                               "\" vanishes at the base point t=" + ring->base_point().to_string());
    return LocalScalar(ring, std::move(f.num), std::move(f.den));
}

FieldElem parse_field_elem(BaseField field, std::string_view text)
{
    ExprParser parser(field, text, false);
    const Fraction f = parser.parse();
    return f.num.coeff(0) / f.den.coeff(0);
}

}  // namespace semieuler
