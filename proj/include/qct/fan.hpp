/*
 * fan.hpp
 * -------
 * Rational simplicial (and, for inputs awaiting resolution, possibly
 * non-simplicial) fans given by primitive ray vectors and maximal cones.
 *
 * The engine only ever needs a handful of concrete fans with at most a
 * few dozen cones, so every check here is exact and exhaustive:
 *
 *   - simpliciality and smoothness are decided by exact rank/determinant
 *     computations over the rationals;
 *   - "pseudo-completeness" is a sound necessary battery for completeness:
 *     every maximal cone must be full-dimensional, every codimension-one
 *     face must be shared by exactly two maximal cones, and a seeded
 *     deterministic sample of rational directions must all lie in some
 *     maximal cone (exact Caratheodory membership test).  The battery can
 *     reject fans but a PASS is reported as evidence, not proof.
 *
 * Fans also know how to read/write themselves in a plain-text format and
 * how to test equality with another fan up to relabelling of rays and up
 * to a unimodular change of lattice coordinates.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qct/linalg.hpp"

namespace qct::toric {

using algebra::Scalar;
using algebra::ScalarMat;
using algebra::Vec;

// ============================================================ fan data ====

/// Integer lattice vector (one ray of a fan lives in Z^dim).
using RayVec = std::vector<long long>;

/// A fan: primitive integer rays plus the list of maximal cones, each a
/// set of ray indices (0-based internally; the text format is 1-based).
/// Cone index lists are kept sorted ascending.
struct Fan {
    int dim = 0;
    std::vector<RayVec> rays;
    std::vector<std::vector<int>> maxCones;

    [[nodiscard]] int numRays() const { return static_cast<int>(rays.size()); }
    [[nodiscard]] int numMaxCones() const { return static_cast<int>(maxCones.size()); }
};

/// Throws StructuralError unless the fan is well formed: positive
/// dimension, nonzero primitive pairwise-distinct rays of the right
/// width, nonempty duplicate-free cone index lists in range, no maximal
/// cone's ray set contained in another's.
void check_well_formed(const Fan& fan);

// ========================================================== validation ====

/// Tuning for the pseudo-completeness sampling stage.  The generator and
/// the reduction of its output to coordinates are pinned down exactly, so
/// a given (seed, sampleCount, coordinateBound) always produces the same
/// directions on every platform.
struct ValidateOptions {
    int sampleCount = 200;
    std::uint64_t seed = 20260819u;
    long long coordinateBound = 1000;
};

/// Outcome of validate_fan.  The three headline flags are what callers
/// normally consume; the remaining fields break the completeness battery
/// down for diagnostics.
struct FanReport {
    bool simplicial = false;
    bool smooth = false;
    bool pseudoComplete = false;

    std::vector<int> nonSimplicialCones;  ///< max cones with dependent rays
    std::vector<int> nonSmoothCones;      ///< simplicial cones, |det| != 1
    bool fullDimensional = false;         ///< every max cone spans R^dim
    bool facetPairing = false;            ///< codim-1 faces pair up exactly
    bool samplingCovered = false;         ///< all sampled directions covered
    /// No sampled direction lies strictly inside two maximal cones
    /// (checked for simplicial full-dimensional fans; overlapping cones
    /// would satisfy coverage but fail this).
    bool samplingInjective = false;

    [[nodiscard]] bool allGood() const { return simplicial && smooth && pseudoComplete; }
};

/// Exact validation of a well-formed fan (throws StructuralError if it is
/// not).  Never throws on mathematically "bad" fans -- non-simplicial or
/// incomplete fans are legitimate inputs and get honest flags instead.
[[nodiscard]] FanReport validate_fan(const Fan& fan, const ValidateOptions& opts = {});

/// Exact membership of a rational point in the cone spanned by the given
/// rays (any subset of the fan's rays; the cone need not be maximal or
/// full-dimensional).  Uses Caratheodory: the point lies in the cone iff
/// it is a nonnegative combination of some linearly independent subset.
/// The point must be real (imaginary parts zero) of length fan.dim.
[[nodiscard]] bool point_in_cone(const Fan& fan, const std::vector<int>& coneRays, const Vec& point);

// ================================================================== IO ====

/// Plain-text fan format: lines starting with '#' are comments, the first
/// block of non-blank lines holds one ray per line (space-separated
/// integers, all of equal width = dim), a blank line separates, and the
/// second block holds one maximal cone per line (1-based ray indices).
/// Throws StructuralError on malformed text, including anything that
/// fails check_well_formed.
[[nodiscard]] Fan read_fan_text(const std::string& text);
[[nodiscard]] Fan read_fan_file(const std::string& path);
[[nodiscard]] std::string write_fan_text(const Fan& fan);
void write_fan_file(const std::string& path, const Fan& fan);

// ============================================================ equality ====

/// True iff the fans have the same ray vectors (as sets, exact integer
/// equality) and, after matching rays, the same family of maximal cones.
[[nodiscard]] bool same_fan(const Fan& a, const Fan& b);

/// Witness that two fans agree up to a lattice automorphism: an integer
/// matrix U with det = +-1 such that U * (ray i of a) = ray rayMap[i] of
/// b for all i, carrying all maximal cones of a onto those of b.
struct UnimodularMatch {
    std::vector<RayVec> matrix;  ///< row-major dim x dim, acts on columns
    std::vector<int> rayMap;     ///< a's ray i |-> b's ray rayMap[i]
};

/// Exhaustive search for a UnimodularMatch (the fans here have <= 9 rays,
/// so trying all assignments of a spanning ray tuple is cheap).  Requires
/// both ray sets to span the full lattice; returns nullopt if no lattice
/// automorphism identifies the fans.
[[nodiscard]] std::optional<UnimodularMatch> unimodular_match(const Fan& a, const Fan& b);

/// Applies a mat(ch) to a fan: relabels nothing, but maps every ray
/// through the matrix.  Handy for asserting that a found match really
/// carries one fan onto the other.
[[nodiscard]] Fan apply_lattice_map(const Fan& fan, const std::vector<RayVec>& matrix);

// =========================================================== factories ====

/// The complete smooth fan of n-dimensional projective space: rays
/// e_1..e_n and -(e_1+...+e_n), maximal cones = all n-subsets.
[[nodiscard]] Fan projective_space_fan(int n);

/// Product fan: rays of a (zero-padded) followed by rays of b, maximal
/// cones = unions of one cone from each factor.
[[nodiscard]] Fan product_fan(const Fan& a, const Fan& b);

} // namespace qct::toric
