/*
 * scalar.cpp
 * ----------
 * Arithmetic and (de)serialization for Gaussian rationals.
 */
#include "qct/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "qct/errors.hpp"

namespace qct::algebra {

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw StructuralError("Scalar::rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw StructuralError("Scalar::inverse: division by zero");
    // 1/(a+bi) = (a-bi)/(a^2+b^2)
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

std::string rationalStr(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

// Parses "num" or "num/den" starting at pos; advances pos past the token.
mpq_class parseRational(const std::string& t, size_t& pos) {
    bool negative = false;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
        negative = t[pos] == '-';
        ++pos;
    }
    size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == start)
        throw StructuralError("Scalar::parse: expected number in '" + t + "'");
    std::string num = (negative ? "-" : "") + t.substr(start, pos - start);
    std::string den = "1";
    if (pos < t.size() && t[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == dstart) throw StructuralError("Scalar::parse: expected denominator in '" + t + "'");
        den = t.substr(dstart, pos - dstart);
    }
    mpq_class q(num + "/" + den);
    q.canonicalize();
    return q;
}

} // namespace

std::string Scalar::str() const {
    if (isRational()) return rationalStr(re_);
    std::string s = rationalStr(re_);
    if (im_ > 0) s += "+";
    // negative imaginary part carries its own sign
    s += rationalStr(im_) + "*i";
    return s;
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw StructuralError("Scalar::parse: empty string");
    size_t pos = 0;
    mpq_class first = parseRational(text, pos);
    if (pos == text.size()) return Scalar(first);
    // Remainder must be "<signed rational>*i".
    mpq_class second = parseRational(text, pos);
    if (text.substr(pos) != "*i")
        throw StructuralError("Scalar::parse: malformed scalar '" + text + "'");
    return Scalar(first, second);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace qct::algebra
