/*
 * graded_ring.hpp
 * ---------------
 * Finite-dimensional graded commutative rings with a fixed basis,
 * deformation (Novikov) variables, and a Poincare-style pairing.
 *
 * Three ways rings arise here:
 *   - ring_from_presentation: generators + homogeneous relations, with
 *     normal forms computed degree-by-degree via exact linear algebra
 *     (no Groebner bases: the graded pieces are small),
 *   - quantum_ring_from_generator_matrices: the full multiplication
 *     table lifted from the multiplication operators of a set of ring
 *     generators by decomposing each basis element as a polynomial in
 *     generators (never dividing by anything),
 *   - subquotient: V/W with the induced product, evaluated at a point
 *     of the deformation space (some q variables set to 1).
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qct/linalg.hpp"
#include "qct/polynomial.hpp"
#include "qct/rational_function.hpp"

namespace qct::ring {

using algebra::Mat;
using algebra::MultiIndex;
using algebra::Poly;
using algebra::RationalFunction;
using algebra::Scalar;
using algebra::ScalarMat;
using algebra::Subspace;
using algebra::Vec;

/// One multiplication operator (x *) in basis coordinates, tagged with
/// the name of x.
struct QuantumMatrix {
    std::string label;
    Mat<RationalFunction> mat;
};

/// A graded ring with unit, given by its full multiplication table.
/// ops[i] is the matrix of (b_i *) acting on basis coordinates; entries
/// are rational functions of the deformation variables (constants for
/// classical rings).
struct GradedRing {
    std::vector<std::string> basisNames;
    std::vector<int> degrees;        // cohomological degree of each basis element
    std::vector<std::string> qNames; // deformation variable names
    std::vector<int> qDegrees;       // cohomological degree of each q variable
    int unit = 0;                    // basis index of 1
    std::vector<Mat<RationalFunction>> ops;
    ScalarMat pairing;

    [[nodiscard]] int dim() const { return static_cast<int>(basisNames.size()); }
    [[nodiscard]] int qvars() const { return static_cast<int>(qNames.size()); }
    [[nodiscard]] int topDegree() const;
    [[nodiscard]] RationalFunction rfZero() const {
        return RationalFunction(Poly(qvars()));
    }

    /// Product column b_i * b_j.
    [[nodiscard]] std::vector<RationalFunction> product(int i, int j) const;
    /// Product of two scalar coordinate vectors.
    [[nodiscard]] std::vector<RationalFunction> productVec(const Vec& u, const Vec& v) const;
    /// Multiplication operator of an arbitrary element (scalar coords).
    [[nodiscard]] Mat<RationalFunction> opOf(const Vec& u) const;
    /// Pairing of scalar coordinate vectors.
    [[nodiscard]] Scalar pair(const Vec& u, const Vec& v) const;
    /// Basis index by name (throws StructuralError when absent).
    [[nodiscard]] int indexOf(const std::string& name) const;
};

/// Outcome of a structural verification; ok iff problems is empty.
struct CheckReport {
    std::vector<std::string> problems;
    [[nodiscard]] bool ok() const { return problems.empty(); }
};

/// Unit element, commutativity of the table, symmetry/nondegeneracy of
/// the pairing, complementary-degree support, and the Frobenius
/// property (b_i b_j, b_k) = (b_i, b_j b_k).
[[nodiscard]] CheckReport check_frobenius(const GradedRing& r);
/// Every table entry homogeneous of the expected weighted degree.
[[nodiscard]] CheckReport check_grading(const GradedRing& r);
/// Full associativity: ops[i] ops[j] = sum_k table[i][j][k] ops[k].
[[nodiscard]] CheckReport check_associativity(const GradedRing& r);

// ===================================================================
// Presented rings
// ===================================================================

/// A ring presented by generators and homogeneous relations, together
/// with exact normal forms onto a monomial (or expression) basis.
class PresentedRing {
public:
    /// generators: names of the ring generators; genDegrees gives their
    /// cohomological degrees (2 for divisor classes).
    /// relations: homogeneous polynomials in the generators.
    /// basis: optional explicit basis (homogeneous polynomials in the
    /// generators; often monomials).  When absent, a greedy monomial
    /// basis is chosen degree by degree.
    /// integralOf: top normalization (P, s) declaring integral(P) = s.
    PresentedRing(std::vector<std::string> generators, std::vector<int> genDegrees,
                  std::vector<Poly> relations, std::optional<std::vector<Poly>> basis,
                  std::pair<Poly, Scalar> integralOf);

    [[nodiscard]] const GradedRing& ring() const { return ring_; }
    [[nodiscard]] const std::vector<std::string>& generators() const { return gens_; }
    [[nodiscard]] const std::vector<Poly>& basisExprs() const { return basisExprs_; }
    [[nodiscard]] int dim() const { return static_cast<int>(basisExprs_.size()); }

    /// Normal form: coordinates of a polynomial in the generators.
    [[nodiscard]] Vec reduce(const Poly& p) const;
    /// Integral (top-degree coefficient against the normalization).
    [[nodiscard]] Scalar integral(const Poly& p) const;

private:
    std::vector<std::string> gens_;
    std::vector<int> genDegrees_;
    std::vector<Poly> relations_;
    std::vector<Poly> basisExprs_;
    GradedRing ring_;
    int topGenDegree_ = 0;  // top degree in generator-weight units
    int topIndex_ = -1;     // basis index of the top-degree element
    Scalar topIntegral_{0}; // integral of that basis element
    // Normal form of each monomial: its degree plus coordinates on that
    // degree's slice of the basis (global indices in degreeIndices_).
    std::map<MultiIndex, std::pair<int, Vec>> normalForms_;
    std::map<int, std::vector<int>> degreeIndices_;
    std::set<int> degreesBuilt_;

    void buildDegree(int d, bool chooseBasis);
};

/// Convenience wrapper matching the functional interface.
[[nodiscard]] PresentedRing ring_from_presentation(
    std::vector<std::string> generators, std::vector<int> genDegrees,
    std::vector<Poly> relations, std::optional<std::vector<Poly>> basis,
    std::pair<Poly, Scalar> integralOf);

// ===================================================================
// Lifting a full quantum table from generator operators
// ===================================================================

/// Build the full deformed multiplication table from the operators of a
/// generating set of basis elements.  Each basis element is decomposed
/// classically as a combination of products (generator * lower basis
/// element); associativity then determines its deformed operator, with
/// same-degree corrections resolved greedily.  Throws
/// ConstructionFailure if the generators do not generate or a cyclic
/// same-degree correction appears.
[[nodiscard]] GradedRing quantum_ring_from_generator_matrices(
    const PresentedRing& classical, const std::vector<int>& generatorIndices,
    const std::vector<Mat<RationalFunction>>& generatorOps,
    std::vector<std::string> qNames, std::vector<int> qDegrees);

// ===================================================================
// Subquotients at a boundary point of the deformation space
// ===================================================================

struct SubquotientSpec {
    std::vector<Vec> vList;              // ordered spanning set of V
    std::vector<std::string> vNames;     // names aligned with vList
    std::vector<Vec> wList;              // spanning set of W (subset of span V)
    std::vector<int> evalOnes;           // q indices evaluated at 1
    std::vector<int> keepVars;           // q indices kept, in output order
};

struct Subquotient {
    GradedRing ring;                     // ring structure on V/W
    std::vector<int> repIndices;         // which vList entries represent the basis
    std::vector<Vec> reps;               // their ambient coordinate vectors
    Subspace vSpan;
    Subspace wSpan;
};

/// Build V/W with the induced product and pairing.  Throws NotClosed
/// (with a witness) when a product leaves V + W or W fails to absorb
/// V * W; DegeneratePairing when the induced pairing is ill-defined or
/// degenerate; EvaluationPole when a product has a pole at the
/// evaluation point.
[[nodiscard]] Subquotient subquotient(const GradedRing& r, const SubquotientSpec& spec);

} // namespace qct::ring
