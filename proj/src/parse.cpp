#include "lecycles/parse.hpp"

#include <cctype>

namespace lecycles {

namespace {

class Parser {
public:
    Parser(const std::string& text, const VarsPtr& vars) : text_(text), vars_(vars) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        Polynomial p = term();
        if (negate) p = -p;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Polynomial t = term();
            if (c == '+')
                p += t;
            else
                p -= t;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            take();
            p = p * factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(peek())) fail("exponent must be a positive integer");
            unsigned long e = natural();
            if (e == 0) throw ParseError("exponent must be a positive integer", at);
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return p;
        }
        if (std::isdigit(c)) return rational();
        if (std::isalpha(c) || c == '_') return identifier();
        fail("expected a number, variable, or '('");
        return Polynomial::zero(vars_);  // unreachable
    }

    Polynomial rational() {
        Int num = integer_digits();
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(peek())) fail("expected denominator digits");
            Int den = integer_digits();
            if (den == 0) throw ParseError("division by zero in rational literal", at);
            Rat r(num, den);
            r.canonicalize();
            return Polynomial::constant(vars_, r);
        }
        return Polynomial::constant(vars_, Rat(num));
    }

    Polynomial identifier() {
        std::size_t at = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        for (std::size_t i = 0; i < vars_->size(); ++i)
            if ((*vars_)[i] == name) return Polynomial::variable(vars_, i);
        throw ParseError("unknown identifier '" + name + "'", at);
    }

    Int integer_digits() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return Int(digits);
    }

    unsigned long natural() {
        std::size_t at = pos_;
        Int v = integer_digits();
        if (!v.fits_ulong_p()) throw ParseError("exponent too large", at);
        return v.get_ui();
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    const VarsPtr& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars) {
    return Parser(text, vars).run();
}

}  // namespace lecycles
