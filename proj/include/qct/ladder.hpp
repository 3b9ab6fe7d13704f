/*
 * ladder.hpp
 * ----------
 * Ladder diagrams for partial flag varieties Fl(n_1,...,n_l, n) and the
 * toric pair they generate: the singular Gorenstein Fano X_sing (cones
 * over the facets of the reflexive hull of the edge vectors) and its
 * small crepant resolutions X_res.
 *
 * The diagram lives in Z^2.  Dots D and stars S are fixed vertex sets
 * determined by (n, steps); edges step right (1,0) or down (0,-1)
 * between vertices.  Each edge e gives a lattice vector
 * r_e = e_head - e_tail in R^D (star coordinates are zero), and these
 * vectors are the rays of both fans.
 *
 * A resolution candidate is determined by choosing, for every box of
 * the diagram, one of its two corners (lower-left or upper-right) as a
 * primitive collection; the edges not used by any chosen corner must
 * then decompose into l star-to-star paths, which become the remaining
 * primitive collections.  Maximal cones are the maximal edge subsets
 * containing no chosen collection.  Every candidate is verified: the
 * fan must be well formed, smooth, pseudo-complete, have exactly the
 * chosen collections as its minimal non-faces, and carry an exact
 * subdivision certificate against X_sing.  All valid candidates are
 * returned (the choice of small resolution is genuinely non-unique in
 * general); the all-lower-left orientation comes first when it is valid.
 *
 * Each candidate also carries its divisor class data: curve classes are
 * read off the path relations (sum of r_e over a star-to-star path is
 * zero) and the box relations (corner minus opposite corner), and the
 * nef basis is dual to them.  Path classes come first, then box classes;
 * c1 therefore has the path lengths as its leading entries and zeros for
 * the boxes, which makes the box deformation variables degree zero.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qct/fan.hpp"
#include "qct/toric.hpp"

namespace qct::toric {

/// A lattice point of the diagram.
using GridPoint = std::pair<int, int>;

/// One oriented edge; head - tail is (1,0) or (0,-1).
struct LadderEdge {
    GridPoint tail;
    GridPoint head;
};

/// A unit box of the diagram with its two corner edge pairs, as indices
/// into LadderDiagram::edges.
struct LadderBox {
    GridPoint lowerLeft;
    std::vector<int> corner;     ///< edges through the lower-left vertex
    std::vector<int> cornerOpp;  ///< edges through the upper-right vertex
};

/// The full diagram for (n, steps).  Dots are ordered by column, top to
/// bottom (lexicographic in (i, -j)); this ordering fixes the R^D
/// coordinates of the rays.  Edges are ordered the same way by (tail,
/// head), and edge k is ray k of every generated fan.
struct LadderDiagram {
    int n = 0;
    std::vector<int> steps;
    std::vector<GridPoint> dots;
    std::vector<GridPoint> stars;  ///< stars 1..l+1 in diagram order
    std::vector<LadderEdge> edges;
    std::vector<std::vector<int>> roofs;  ///< literal roof edge sets, i = 1..l
    std::vector<LadderBox> boxes;         ///< ordered by lower-left vertex

    [[nodiscard]] int numDots() const { return static_cast<int>(dots.size()); }
    [[nodiscard]] int numEdges() const { return static_cast<int>(edges.size()); }
    [[nodiscard]] RayVec rayOf(int edge) const;  ///< e_head - e_tail over the dots
};

/// One verified small resolution.
struct LadderCandidate {
    std::vector<bool> flipped;  ///< per box: true = upper-right corner chosen
    Fan fan;
    DivisorClassData data;                        ///< paths first, then boxes
    std::vector<std::vector<int>> pathCollections;  ///< sorted edge sets, i = 1..l
    std::vector<std::vector<int>> boxCollections;   ///< chosen corner per box
};

/// The generated pair plus every valid resolution candidate.
struct LadderFans {
    LadderDiagram diagram;
    Fan fanSing;
    bool hullReflexive = false;  ///< all facet normals of the hull are integral
    std::vector<LadderCandidate> candidates;
};

/// Builds the diagram, X_sing, and all verified resolution candidates
/// for 0 < steps[0] < ... < steps back() < n.  Throws StructuralError on
/// malformed (n, steps) and ConstructionFailure (with per-orientation
/// diagnostics) if no candidate survives verification.
[[nodiscard]] LadderFans ladder_fans(int n, const std::vector<int>& steps);

} // namespace qct::toric
