/*
 * scalar.hpp
 * ----------
 * The coefficient field of the engine: Gaussian rationals a + b*i with
 * arbitrary-precision rational parts (GMP mpq).  Everything downstream
 * is exact; no floating point appears anywhere in the library.
 */
#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace qct::algebra {

/// An element a + b*i of Q(i), stored as two canonical mpq values.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int n) : re_(n), im_(0) {}                 // NOLINT: implicit by design
    Scalar(long n) : re_(n), im_(0) {}                // NOLINT
    explicit Scalar(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// num/den as a rational scalar; den must be nonzero.
    [[nodiscard]] static Scalar rational(long num, long den);
    /// The imaginary unit.
    [[nodiscard]] static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    [[nodiscard]] const mpq_class& re() const { return re_; }
    [[nodiscard]] const mpq_class& im() const { return im_; }

    [[nodiscard]] bool isZero() const { return re_ == 0 && im_ == 0; }
    [[nodiscard]] bool isOne() const { return re_ == 1 && im_ == 0; }
    [[nodiscard]] bool isRational() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Complex conjugate a - b*i.
    [[nodiscard]] Scalar conjugate() const { return Scalar(re_, -im_); }
    /// Multiplicative inverse; throws StructuralError on zero.
    [[nodiscard]] Scalar inverse() const;

    /// Lossless text form: "a/b" when rational, "a/b+c/d*i" otherwise
    /// (denominator suppressed when 1, "+ " becomes "-" for negative im).
    [[nodiscard]] std::string str() const;
    /// Parse the exact output format of str(); throws StructuralError.
    [[nodiscard]] static Scalar parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    mpq_class re_, im_;
};

} // namespace qct::algebra
