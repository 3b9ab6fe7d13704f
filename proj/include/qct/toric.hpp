/*
 * toric.hpp
 * ---------
 * From a fan to its cohomology: divisor/curve class bookkeeping,
 * Stanley-Reisner presentations of H^* for smooth pseudo-complete fans,
 * and the intersection numbers R_i . beta that drive the hypergeometric
 * series of the mirror engine.
 *
 * Divisor class data is caller-supplied: each ray class R_i is expressed
 * as an integer combination of a chosen basis m_1..m_k of degree-2
 * classes, and curve classes beta_1..beta_k are the dual basis, so that
 * R_i . beta_j is simply the m_j-coefficient of R_i.  The data is checked
 * exactly against the fan (the lattice linear relations must annihilate
 * the classes, the classes must span, and their sum must be the stated
 * anticanonical vector) before anything downstream trusts it.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qct/fan.hpp"
#include "qct/graded_ring.hpp"
#include "qct/polynomial.hpp"

namespace qct::toric {

using algebra::MultiIndex;
using algebra::Poly;

// ======================================================= divisor data ====

/// Degree-2 classes and dual curve classes for a fan, in a caller-chosen
/// nef basis.  rayClasses[i] lists the m-coordinates of the i-th ray's
/// divisor class; c1 lists the m-coordinates of the anticanonical class.
struct DivisorClassData {
    std::vector<std::string> nefNames;               ///< m_1..m_k
    std::vector<std::string> curveNames;             ///< beta/q names, dual to m
    std::vector<std::vector<long long>> rayClasses;  ///< numRays x k
    std::vector<long long> c1;                       ///< k entries

    [[nodiscard]] int numClasses() const { return static_cast<int>(nefNames.size()); }
};

/// Exact consistency of divisor data with its fan:
///   - dimensions line up and curve/nef name counts agree;
///   - every lattice linear relation holds: for each lattice coordinate t,
///     sum_i rays[i][t] * rayClasses[i] = 0 (divisors of characters are
///     trivial classes);
///   - the rayClasses matrix has rank k (the classes span degree 2);
///   - sum_i rayClasses[i] = c1 (anticanonical class of a toric variety).
/// Throws StructuralError with a description of the first violation.
void check_divisor_data(const Fan& fan, const DivisorClassData& data);

/// The vector (R_i . beta) over all rays i, for beta = sum_j n_j beta_j
/// given as the exponents of a MultiIndex over the curve basis.
/// Checks the divisor data first; beta = 0 gives the zero vector.
[[nodiscard]] std::vector<long long> intersection_degrees(const Fan& fan,
                                                          const DivisorClassData& data,
                                                          const MultiIndex& beta);

/// Degrees of the deformation variables: deg q_j = 2 * (c1 . beta_j),
/// i.e. twice the c1 entries.
[[nodiscard]] std::vector<int> quantum_degrees(const Fan& fan, const DivisorClassData& data);

// ========================================== Stanley-Reisner presentation ====

/// H^*(X) of a smooth pseudo-complete toric X, presented on one
/// generator per ray: linear relations from the lattice, and one
/// square-free monomial relation per minimal non-face (primitive
/// collection) of the fan.
struct StanleyReisnerPresentation {
    std::vector<std::string> rayNames;              ///< generators, one per ray
    std::vector<Poly> linearRelations;              ///< in the ray variables
    std::vector<Poly> srRelations;                  ///< in the ray variables
    std::vector<std::vector<int>> minimalNonFaces;  ///< sorted ray index sets
};

/// Minimal non-faces (primitive collections) of a fan: subsets of rays
/// that span no cone of the fan while every proper subset does.  Sorted
/// by size, then lexicographically.  Exhaustive over ray subsets (fans
/// here have at most nine rays).
[[nodiscard]] std::vector<std::vector<int>> minimal_non_faces(const Fan& fan);

/// Computes the presentation; requires the fan to validate as smooth and
/// pseudo-complete, else throws UnsupportedFan.
[[nodiscard]] StanleyReisnerPresentation stanley_reisner_presentation(const Fan& fan);

/// The Stanley-Reisner relations rewritten in the nef basis: substitute
/// R_i -> sum_j rayClasses[i][j] m_j.  The linear relations vanish under
/// this substitution (that is part of check_divisor_data), so the listed
/// polynomials generate the full ideal in the m variables.
[[nodiscard]] std::vector<Poly> relations_in_nef_basis(const Fan& fan,
                                                       const DivisorClassData& data,
                                                       const StanleyReisnerPresentation& pres);

/// The cohomology ring as a PresentedRing over the nef basis variables
/// m_1..m_k (all of degree 2), normalized so that the class of a
/// torus-fixed point (the product of the rays of any maximal cone)
/// integrates to 1.  An explicit basis may be supplied; otherwise a
/// greedy monomial basis is chosen.  The ring's total dimension equals
/// the number of maximal cones.
[[nodiscard]] ring::PresentedRing cohomology_ring_from_fan(
    const Fan& fan, const DivisorClassData& data,
    std::optional<std::vector<Poly>> basis = std::nullopt);

} // namespace qct::toric
