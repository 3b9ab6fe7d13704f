/*
 * rational_function.hpp
 * ---------------------
 * Exact rational functions in the deformation variables, kept in the
 * shape num / prod(factor^mult).  The denominator is never expanded:
 * it stays a list of polynomial factors so that poles along specific
 * hypersurfaces (e.g. {q2 = 1}) remain visible and residues stay cheap.
 *
 * Normal form invariants:
 *   - each factor is scaled so its lowest lex monomial has coefficient 1
 *     (constants move into the numerator),
 *   - factors are pairwise distinct and canonically sorted,
 *   - no factor divides the numerator (the fraction is reduced with
 *     respect to its own factor list).
 * Reduction uses only exact single-divisor polynomial division; no
 * general factorization is ever attempted.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qct/polynomial.hpp"
#include "qct/series.hpp"

namespace qct::algebra {

class RationalFunction {
public:
    using Factor = std::pair<Poly, int>; // (factor, multiplicity >= 1)

    RationalFunction() : num_(0) {}
    /// A polynomial viewed as a rational function.
    explicit RationalFunction(Poly num) : num_(std::move(num)) {}
    /// General constructor; normalizes, merges and reduces.
    RationalFunction(Poly num, std::vector<Factor> den);

    [[nodiscard]] static RationalFunction constant(int nvars, const Scalar& c) {
        return RationalFunction(Poly::constant(nvars, c));
    }

    [[nodiscard]] int nvars() const { return num_.nvars(); }
    [[nodiscard]] const Poly& numerator() const { return num_; }
    [[nodiscard]] const std::vector<Factor>& denominator() const { return den_; }
    [[nodiscard]] bool isZero() const { return num_.isZero(); }
    [[nodiscard]] bool isPolynomial() const { return den_.empty(); }
    /// Multiplicity of the given (normalized) factor in the denominator.
    [[nodiscard]] int factorMultiplicity(const Poly& factor) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator*(const Scalar& c, const RationalFunction& f) {
        return RationalFunction(c * f.num_, f.den_);
    }

    /// Mathematical equality, decided by cross-multiplication.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Substitute one variable := 1.  Throws EvaluationPole when a
    /// denominator factor vanishes identically there.
    [[nodiscard]] RationalFunction substituteOne(int v) const;
    /// Value at all variables := 0; throws EvaluationPole on a factor
    /// with vanishing constant term.
    [[nodiscard]] Scalar constantTermValue() const;
    /// Expand as a truncated power series (all factors need a nonzero
    /// constant term).
    [[nodiscard]] ScalarSeries expand(const std::vector<int>& bounds) const;
    /// Weighted homogeneity: numerator homogeneous and every factor
    /// homogeneous; degreeOut gets deg(num) - sum of factor degrees.
    [[nodiscard]] bool isHomogeneous(const std::vector<int>& weights, int* degreeOut = nullptr) const;
    /// Map into a larger variable space (varMap as in Poly::renameVars).
    [[nodiscard]] RationalFunction renameVars(const std::vector<int>& varMap, int newNvars) const;

    [[nodiscard]] std::string str(const std::vector<std::string>& names = {}) const;

private:
    Poly num_;
    std::vector<Factor> den_;

    void normalize();
};

/// Residue conventions at q = 1 for a simple pole in one variable:
///   Plain : lim_{q->1} (1-q) f
///   DLog  : lim_{q->1} (q-1)/q * f   (the residue of f dlog q at q = 1)
/// The two differ exactly by a sign at q = 1.
enum class ResidueConvention { Plain, DLog };

/// Residue of f at {var = 1}.  Returns 0 when there is no (1-q_var)
/// factor; throws HigherOrderPole for multiplicity >= 2 and
/// NonIsolatedPole when another factor vanishes identically at var = 1.
[[nodiscard]] RationalFunction residue_at_one(const RationalFunction& f, int var,
                                              ResidueConvention convention);

} // namespace qct::algebra
