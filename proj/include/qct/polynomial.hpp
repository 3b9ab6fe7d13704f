/*
 * polynomial.hpp
 * --------------
 * Multi-indices (exponent vectors) and exact multivariate polynomials
 * over the Gaussian rationals.  Polynomials are sparse maps from
 * multi-index to coefficient with lexicographic key order; the number of
 * variables is fixed per instance and checked on every binary operation.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qct/scalar.hpp"

namespace qct::algebra {

/// Exponent vector of a monomial; also used for series truncation boxes
/// and curve classes.  Ordered lexicographically (inherited from vector).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int nvars) : e_(nvars, 0) {}
    explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) {}
    MultiIndex(std::initializer_list<int> e) : e_(e) {}

    [[nodiscard]] int size() const { return static_cast<int>(e_.size()); }
    [[nodiscard]] int operator[](int v) const { return e_[v]; }
    int& operator[](int v) { return e_[v]; }
    [[nodiscard]] const std::vector<int>& exponents() const { return e_; }

    /// Total degree (sum of exponents).
    [[nodiscard]] int degree() const;
    /// Weighted degree with per-variable integer weights.
    [[nodiscard]] int degree(const std::vector<int>& weights) const;
    [[nodiscard]] bool isZero() const;

    /// Component-wise sum (monomial product).
    [[nodiscard]] MultiIndex operator+(const MultiIndex& o) const;
    /// Component-wise difference (monomial quotient); no positivity check.
    [[nodiscard]] MultiIndex operator-(const MultiIndex& o) const;
    /// True when every exponent of o is <= the matching one here.
    [[nodiscard]] bool divisibleBy(const MultiIndex& o) const;
    /// True when every exponent is <= the matching bound (used for
    /// truncation boxes).
    [[nodiscard]] bool withinBounds(const std::vector<int>& bounds) const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.e_ < b.e_; }

    /// "1" for the zero index, else "q1^2*q3"-style with the given names
    /// (names default to x1, x2, ...).
    [[nodiscard]] std::string str(const std::vector<std::string>& names = {}) const;
    /// Parse the output of str(); needs the variable-name table.
    [[nodiscard]] static MultiIndex parse(const std::string& text,
                                          const std::vector<std::string>& names);

private:
    std::vector<int> e_;
};

/// Sparse exact polynomial in a fixed number of variables.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    [[nodiscard]] static Poly constant(int nvars, const Scalar& c);
    [[nodiscard]] static Poly variable(int nvars, int v, int power = 1);
    [[nodiscard]] static Poly monomial(MultiIndex m, const Scalar& c);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] bool isZero() const { return terms_.empty(); }
    [[nodiscard]] bool isConstant() const;
    /// Coefficient of the zero multi-index.
    [[nodiscard]] Scalar constantTerm() const;
    [[nodiscard]] const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
    [[nodiscard]] Scalar coeff(const MultiIndex& m) const;
    void setCoeff(const MultiIndex& m, const Scalar& c);
    void addTerm(const MultiIndex& m, const Scalar& c);

    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const;
    /// Largest exponent of one variable; 0 for the zero polynomial.
    [[nodiscard]] int degreeIn(int v) const;
    /// True when all terms share one weighted degree (vacuously for 0).
    [[nodiscard]] bool isHomogeneous(const std::vector<int>& weights, int* degreeOut = nullptr) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, Poly p);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Ordering usable as a map key (lex on the term list).
    friend bool operator<(const Poly& a, const Poly& b);

    /// Substitute one variable := 1 (exponents dropped, like terms merged).
    [[nodiscard]] Poly substituteOne(int v) const;
    /// Substitute q_v := 0, i.e. keep only terms with exponent 0 in v.
    [[nodiscard]] Poly substituteZero(int v) const;
    /// Exact division: returns quotient iff divisor divides this exactly.
    [[nodiscard]] std::optional<Poly> divideExact(const Poly& divisor) const;
    /// Map this polynomial into a larger variable space; varMap[v] gives
    /// the new index of old variable v.
    [[nodiscard]] Poly renameVars(const std::vector<int>& varMap, int newNvars) const;

    /// Smallest monomial in lex order; throws on the zero polynomial.
    [[nodiscard]] const MultiIndex& trailingMonomial() const;
    [[nodiscard]] const MultiIndex& leadingMonomial() const;

    [[nodiscard]] std::string str(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    std::map<MultiIndex, Scalar> terms_; // invariant: no zero coefficients stored

    void checkCompatible(const Poly& o, const char* op) const;
};

} // namespace qct::algebra
