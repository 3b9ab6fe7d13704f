/*
 * expr.cpp
 * --------
 * Recursive-descent expression parsing into polynomial fractions.
 */
#include "qct/expr.hpp"

#include <algorithm>
#include <cctype>

#include "qct/errors.hpp"

namespace qct::algebra {

Poly ParsedRat::asPoly() const {
    if (!denIsConstant())
        throw StructuralError("expression has a non-constant denominator where a polynomial "
                              "was expected");
    Scalar c = den.constantTerm();
    if (c.isZero()) throw StructuralError("expression has zero denominator");
    return c.inverse() * num;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names)
        : text_(text), names_(names), nvars_(static_cast<int>(names.size())) {
        for (const auto& n : names_)
            if (n == "i")
                throw StructuralError("expr: variable name 'i' collides with the imaginary unit");
    }

    ParsedRat parse() {
        ParsedRat r = expr();
        skipWs();
        if (pos_ != text_.size())
            throw StructuralError("expr: trailing input at '" + text_.substr(pos_) + "'");
        return r;
    }

private:
    const std::string& text_;
    const std::vector<std::string>& names_;
    int nvars_;
    size_t pos_ = 0;

    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skipWs();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[nodiscard]] char peek() {
        skipWs();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ParsedRat one() const { return {Poly::constant(nvars_, Scalar(1)), Poly::constant(nvars_, Scalar(1))}; }

    static ParsedRat mul(const ParsedRat& a, const ParsedRat& b) {
        return {a.num * b.num, a.den * b.den};
    }
    static ParsedRat div(const ParsedRat& a, const ParsedRat& b) {
        if (b.num.isZero()) throw StructuralError("expr: division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    static ParsedRat add(const ParsedRat& a, const ParsedRat& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }

    ParsedRat expr() {
        ParsedRat r = term();
        for (;;) {
            if (eat('+'))
                r = add(r, term());
            else if (eat('-')) {
                ParsedRat t = term();
                t.num = -t.num;
                r = add(r, t);
            } else
                return r;
        }
    }

    ParsedRat term() {
        ParsedRat r = unary();
        for (;;) {
            if (eat('*'))
                r = mul(r, unary());
            else if (eat('/'))
                r = div(r, unary());
            else
                return r;
        }
    }

    ParsedRat unary() {
        if (eat('-')) {
            ParsedRat r = unary();
            r.num = -r.num;
            return r;
        }
        return power();
    }

    ParsedRat power() {
        ParsedRat base = atom();
        if (eat('^')) {
            skipWs();
            bool neg = eat('-');
            int e = parseInt();
            ParsedRat r = one();
            for (int k = 0; k < e; ++k) r = mul(r, base);
            if (neg) r = div(one(), r);
            return r;
        }
        return base;
    }

    int parseInt() {
        skipWs();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw StructuralError("expr: expected integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    ParsedRat atom() {
        skipWs();
        if (eat('(')) {
            ParsedRat r = expr();
            if (!eat(')')) throw StructuralError("expr: missing ')'");
            return r;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            mpz_class n(std::string(1, text_[pos_]));
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                n = n * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            ParsedRat r = one();
            r.num = Poly::constant(nvars_, Scalar(mpq_class(n)));
            return r;
        }
        if (pos_ < text_.size() &&
            (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "i") {
                ParsedRat r = one();
                r.num = Poly::constant(nvars_, Scalar::i());
                return r;
            }
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end())
                throw StructuralError("expr: unknown name '" + name + "'");
            ParsedRat r = one();
            r.num = Poly::variable(nvars_, static_cast<int>(it - names_.begin()));
            return r;
        }
        throw StructuralError("expr: unexpected character at '" + text_.substr(pos_) + "'");
    }
};

} // namespace

ParsedRat parse_expression(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse();
}

bool parsed_equal(const ParsedRat& a, const ParsedRat& b) {
    return a.num * b.den == b.num * a.den;
}

} // namespace qct::algebra
