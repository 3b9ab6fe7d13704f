/*
 * ladder.cpp
 * ----------
 * Ladder diagram construction and the generation + verification of the
 * singular fan and all of its small-resolution candidates.  Everything
 * is exact; candidate acceptance is decided by the full fan validation
 * battery, an exact minimal-non-face comparison, and a subdivision
 * certificate against the singular fan, never by construction alone.
 */
#include "qct/ladder.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "qct/errors.hpp"
#include "qct/linalg.hpp"

namespace qct::toric {

namespace {

using algebra::ScalarMat;
using algebra::Vec;

/// Reading order of the diagram: left to right, top to bottom.
std::pair<int, int> keyOf(GridPoint v) { return {v.first, -v.second}; }

std::string pointStr(GridPoint v) {
    std::ostringstream os;
    os << "(" << v.first << "," << v.second << ")";
    return os.str();
}

// ========================================================== the diagram ====

LadderDiagram buildDiagram(int n, const std::vector<int>& steps) {
    if (steps.empty())
        throw StructuralError("ladder: the step list must be non-empty");
    int prev = 0;
    for (int s : steps) {
        if (s <= prev)
            throw StructuralError(
                "ladder: steps must be positive and strictly increasing");
        prev = s;
    }
    if (steps.back() >= n)
        throw StructuralError(
            "ladder: every step must be smaller than the ambient rank");

    LadderDiagram dg;
    dg.n = n;
    dg.steps = steps;
    const int l = static_cast<int>(steps.size());

    std::set<GridPoint> dotSet;
    for (int p = 0; p < l; ++p)
        for (int i = 0; i + steps[p] <= n - 1; ++i)
            for (int j = 0; j < steps[p]; ++j) dotSet.insert({i, j});
    dg.dots.assign(dotSet.begin(), dotSet.end());
    std::sort(dg.dots.begin(), dg.dots.end(),
              [](GridPoint a, GridPoint b) { return keyOf(a) < keyOf(b); });

    // Stars s_1..s_{l+1}; s_p sits at (n - n_p, n_{p-1}) with n_0 = 0,
    // and s_{l+1} at (0, n_l).
    for (int p = 1; p <= l; ++p)
        dg.stars.push_back({n - steps[p - 1], p == 1 ? 0 : steps[p - 2]});
    dg.stars.push_back({0, steps[l - 1]});

    std::set<GridPoint> vertexSet(dotSet);
    for (GridPoint s : dg.stars) {
        if (vertexSet.count(s))
            throw StructuralError("ladder: a star collides with a dot at " +
                                  pointStr(s));
        vertexSet.insert(s);
    }

    // Edges step right or down between vertices, ordered by reading order
    // of (tail, head); this ordering fixes the ray numbering of the fans.
    for (GridPoint t : vertexSet)
        for (GridPoint d : {GridPoint{1, 0}, GridPoint{0, -1}}) {
            GridPoint h{t.first + d.first, t.second + d.second};
            if (vertexSet.count(h)) dg.edges.push_back({t, h});
        }
    std::sort(dg.edges.begin(), dg.edges.end(),
              [](const LadderEdge& a, const LadderEdge& b) {
                  return std::pair(keyOf(a.tail), keyOf(a.head)) <
                         std::pair(keyOf(b.tail), keyOf(b.head));
              });

    std::map<std::pair<GridPoint, GridPoint>, int> edgeIndex;
    for (int e = 0; e < dg.numEdges(); ++e)
        edgeIndex[{dg.edges[e].tail, dg.edges[e].head}] = e;
    auto findEdge = [&](GridPoint t, GridPoint h) {
        auto it = edgeIndex.find({t, h});
        if (it == edgeIndex.end())
            throw StructuralError("ladder: expected edge " + pointStr(t) +
                                  " -> " + pointStr(h) + " is missing");
        return it->second;
    };

    // Roof i hugs the inner corner between stars s_{i+1} and s_i: down
    // the left wall, across the shelf, down the inner wall, out to s_i.
    for (int i = 1; i <= l; ++i) {
        const int ni = steps[i - 1];
        const int niPrev = i == 1 ? 0 : steps[i - 2];
        const int niNext = i == l ? n : steps[i];
        std::vector<int> roof;
        roof.push_back(findEdge({n - niNext, ni}, {n - niNext, ni - 1}));
        for (int p = n - niNext; p <= n - ni - 2; ++p)
            roof.push_back(findEdge({p, ni - 1}, {p + 1, ni - 1}));
        for (int q = niPrev + 1; q <= ni - 1; ++q)
            roof.push_back(findEdge({n - ni - 1, q}, {n - ni - 1, q - 1}));
        roof.push_back(findEdge({n - ni - 1, niPrev}, {n - ni, niPrev}));
        std::sort(roof.begin(), roof.end());
        dg.roofs.push_back(std::move(roof));
    }

    // Boxes: unit squares with all four corners in the diagram.  The two
    // corner pairs route around the square through its lower-left or
    // upper-right vertex.
    for (GridPoint v : vertexSet) {
        GridPoint r{v.first + 1, v.second}, u{v.first, v.second + 1},
            ru{v.first + 1, v.second + 1};
        if (!vertexSet.count(r) || !vertexSet.count(u) || !vertexSet.count(ru))
            continue;
        LadderBox box;
        box.lowerLeft = v;
        box.corner = {findEdge(u, v), findEdge(v, r)};
        box.cornerOpp = {findEdge(u, ru), findEdge(ru, r)};
        std::sort(box.corner.begin(), box.corner.end());
        std::sort(box.cornerOpp.begin(), box.cornerOpp.end());
        dg.boxes.push_back(std::move(box));
    }
    std::sort(dg.boxes.begin(), dg.boxes.end(),
              [](const LadderBox& a, const LadderBox& b) {
                  return keyOf(a.lowerLeft) < keyOf(b.lowerLeft);
              });
    return dg;
}

// ===================================================== the singular fan ====

/// Rows of the full ray list as an exact matrix, restricted to a subset.
ScalarMat raySubsetRows(const std::vector<RayVec>& rays,
                        const std::vector<int>& idx) {
    ScalarMat m(static_cast<int>(idx.size()),
                static_cast<int>(rays.front().size()));
    for (int r = 0; r < static_cast<int>(idx.size()); ++r)
        for (int c = 0; c < static_cast<int>(rays.front().size()); ++c)
            m(r, c) = Scalar(static_cast<long>(rays[idx[r]][c]));
    return m;
}

Scalar dotRay(const Vec& u, const RayVec& r) {
    Scalar acc(0);
    for (size_t t = 0; t < r.size(); ++t)
        acc = acc + u[t] * Scalar(static_cast<long>(r[t]));
    return acc;
}

std::string normalKey(const Vec& u) {
    std::string key;
    for (const Scalar& c : u) {
        key += c.re().get_str();
        key += '|';
        key += c.im().get_str();
        key += ';';
    }
    return key;
}

struct SingularFan {
    Fan fan;
    bool reflexive = true;
    /// Facet normal of maxCones[i]: <u, ray> = 1 on the cone, <= 1 globally.
    std::vector<Vec> normals;
    std::map<std::string, int> normalIndex;  ///< normalKey -> cone position
};

/// Visits every size-k subset of {0..n-1} in lexicographic order.
template <typename Fn>
void forEachSubset(int n, int k, Fn&& fn) {
    std::vector<int> pick(k);
    for (int t = 0; t < k; ++t) pick[t] = t;
    if (k > n) return;
    while (true) {
        fn(pick);
        int t = k - 1;
        while (t >= 0 && pick[t] == n - k + t) --t;
        if (t < 0) break;
        ++pick[t];
        for (int s = t + 1; s < k; ++s) pick[s] = pick[s - 1] + 1;
    }
}

/// The cones over the facets of the convex hull of the rays.  Each facet
/// is found by solving <u, r> = 1 on a spanning ray subset and keeping u
/// when no ray lies beyond the hyperplane.
SingularFan buildSingularFan(const LadderDiagram& dg,
                             const std::vector<RayVec>& rays) {
    const int d = dg.numDots();
    const int k = dg.numEdges();
    SingularFan out;
    out.fan.dim = d;
    out.fan.rays = rays;

    std::map<std::string, std::pair<Vec, std::vector<int>>> facets;
    forEachSubset(k, d, [&](const std::vector<int>& pick) {
        ScalarMat rows = raySubsetRows(rays, pick);
        if (algebra::rank(rows) < d) return;
        Vec ones(d, Scalar(1));
        std::optional<Vec> u = algebra::solve(rows, ones);
        if (!u) return;
        std::vector<int> onFacet;
        for (int e = 0; e < k; ++e) {
            Scalar h = dotRay(*u, rays[e]);
            if (!(h.im() == 0))
                throw StructuralError("ladder: non-real facet height");
            if (h.re() > 1) return;  // subset does not span a hull facet
            if (h.re() == 1) onFacet.push_back(e);
        }
        facets.emplace(normalKey(*u), std::pair(*u, std::move(onFacet)));
    });

    std::vector<std::pair<std::vector<int>, Vec>> sorted;
    for (auto& [key, facet] : facets) {
        (void)key;
        sorted.emplace_back(std::move(facet.second), std::move(facet.first));
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [cone, normal] : sorted) {
        for (const Scalar& c : normal)
            if (c.re().get_den() != 1) out.reflexive = false;
        out.normalIndex[normalKey(normal)] = out.fan.numMaxCones();
        out.fan.maxCones.push_back(std::move(cone));
        out.normals.push_back(std::move(normal));
    }
    check_well_formed(out.fan);
    return out;
}

// ================================================ resolution candidates ====

using EdgeMask = std::uint32_t;

EdgeMask maskOf(const std::vector<int>& edges) {
    EdgeMask m = 0;
    for (int e : edges) m |= EdgeMask{1} << e;
    return m;
}

/// Star-to-star walks through the edges not used by the chosen corners.
/// Path i must run from star s_{i+1} to star s_i and the walks together
/// must use every remaining edge; any stall, branch, or leftover edge
/// disqualifies the orientation.
std::optional<std::vector<std::vector<int>>> walkPaths(
    const LadderDiagram& dg, EdgeMask cornerMask, std::string& whyNot) {
    const int l = static_cast<int>(dg.steps.size());
    std::vector<bool> used(dg.numEdges(), false);
    std::vector<std::vector<int>> paths(l);
    int usedCount = 0;

    for (int i = l; i >= 1; --i) {
        GridPoint current = dg.stars[i];  // s_{i+1}
        const GridPoint target = dg.stars[i - 1];
        while (true) {
            int next = -1;
            int options = 0;
            for (int e = 0; e < dg.numEdges(); ++e) {
                if (used[e] || (cornerMask >> e & 1)) continue;
                if (dg.edges[e].tail != current) continue;
                ++options;
                next = e;
            }
            if (options != 1) {
                whyNot = "path walk " + std::string(options ? "branches" : "stalls") +
                         " at " + pointStr(current);
                return std::nullopt;
            }
            used[next] = true;
            ++usedCount;
            paths[i - 1].push_back(next);
            current = dg.edges[next].head;
            if (std::find(dg.stars.begin(), dg.stars.end(), current) !=
                dg.stars.end())
                break;
        }
        if (current != target) {
            whyNot = "path from star " + std::to_string(i + 1) +
                     " ends at the wrong star " + pointStr(current);
            return std::nullopt;
        }
        std::sort(paths[i - 1].begin(), paths[i - 1].end());
    }

    for (int e = 0; e < dg.numEdges(); ++e)
        if (!used[e] && !(cornerMask >> e & 1)) {
            whyNot = "edge " + std::to_string(e + 1) +
                     " is used by no path and no chosen corner";
            return std::nullopt;
        }
    (void)usedCount;
    return paths;
}

/// Maximal subsets of {0..k-1} containing no collection, i.e. the maximal
/// cones of the simplicial fan whose primitive collections are given.
std::vector<std::vector<int>> maximalAvoidingSets(
    int k, const std::vector<std::vector<int>>& collections) {
    std::vector<EdgeMask> cm;
    cm.reserve(collections.size());
    for (const auto& c : collections) cm.push_back(maskOf(c));

    std::vector<std::vector<int>> cones;

    // Disjoint collections covering everything: the complements of the
    // maximal avoiding sets are exactly the transversals.
    EdgeMask all = k == 32 ? ~EdgeMask{0} : (EdgeMask{1} << k) - 1;
    EdgeMask seen = 0;
    bool disjointCover = true;
    for (EdgeMask m : cm) {
        if (seen & m) disjointCover = false;
        seen |= m;
    }
    if (seen != all) disjointCover = false;

    if (disjointCover) {
        std::vector<size_t> choice(collections.size(), 0);
        while (true) {
            EdgeMask drop = 0;
            for (size_t t = 0; t < collections.size(); ++t)
                drop |= EdgeMask{1} << collections[t][choice[t]];
            std::vector<int> cone;
            for (int e = 0; e < k; ++e)
                if (!(drop >> e & 1)) cone.push_back(e);
            cones.push_back(std::move(cone));
            size_t t = 0;
            while (t < collections.size() &&
                   ++choice[t] == collections[t].size()) {
                choice[t] = 0;
                ++t;
            }
            if (t == collections.size()) break;
        }
    } else {
        if (k > 22)
            throw UnsupportedFan(
                "ladder: too many edges for exhaustive cone enumeration");
        for (EdgeMask s = 0; s <= all; ++s) {
            bool avoids = true;
            for (EdgeMask m : cm)
                if ((s & m) == m) { avoids = false; break; }
            if (!avoids) continue;
            bool maximal = true;
            for (int e = 0; e < k && maximal; ++e) {
                if (s >> e & 1) continue;
                EdgeMask grown = s | (EdgeMask{1} << e);
                bool grownAvoids = true;
                for (EdgeMask m : cm)
                    if ((grown & m) == m) { grownAvoids = false; break; }
                if (grownAvoids) maximal = false;
            }
            if (maximal) {
                std::vector<int> cone;
                for (int e = 0; e < k; ++e)
                    if (s >> e & 1) cone.push_back(e);
                cones.push_back(std::move(cone));
            }
        }
    }
    std::sort(cones.begin(), cones.end());
    return cones;
}

/// Checks that every maximal cone of the candidate sits inside a facet
/// cone of the singular fan and that each facet cone is exactly covered
/// by the candidate cones assigned to it.
bool certifySubdivision(const Fan& res, const SingularFan& sing,
                        std::string& whyNot) {
    const int d = res.dim;
    std::vector<std::set<int>> coveredRays(sing.fan.numMaxCones());
    std::vector<int> hit(sing.fan.numMaxCones(), 0);

    for (int c = 0; c < res.numMaxCones(); ++c) {
        const std::vector<int>& cone = res.maxCones[c];
        if (static_cast<int>(cone.size()) != d) {
            whyNot = "resolution cone " + std::to_string(c + 1) +
                     " is not full size";
            return false;
        }
        ScalarMat rows = raySubsetRows(res.rays, cone);
        Vec ones(d, Scalar(1));
        std::optional<Vec> u = algebra::solve(rows, ones);
        if (!u) {
            whyNot = "resolution cone " + std::to_string(c + 1) +
                     " has no height-one normal";
            return false;
        }
        auto it = sing.normalIndex.find(normalKey(*u));
        if (it == sing.normalIndex.end()) {
            whyNot = "resolution cone " + std::to_string(c + 1) +
                     " does not lie on a hull facet";
            return false;
        }
        hit[it->second] += 1;
        coveredRays[it->second].insert(cone.begin(), cone.end());
    }

    for (int f = 0; f < sing.fan.numMaxCones(); ++f) {
        if (hit[f] == 0) {
            whyNot = "hull facet " + std::to_string(f + 1) +
                     " is subdivided by no resolution cone";
            return false;
        }
        std::set<int> expected(sing.fan.maxCones[f].begin(),
                               sing.fan.maxCones[f].end());
        if (coveredRays[f] != expected) {
            whyNot = "hull facet " + std::to_string(f + 1) +
                     " is not exactly covered by its resolution cones";
            return false;
        }
    }
    return true;
}

DivisorClassData divisorData(const LadderDiagram& dg,
                             const std::vector<std::vector<int>>& paths,
                             const std::vector<bool>& flipped) {
    const int l = static_cast<int>(dg.steps.size());
    const int nb = static_cast<int>(dg.boxes.size());
    const int numClasses = l + nb;

    DivisorClassData data;
    for (int t = 1; t <= numClasses; ++t) {
        data.nefNames.push_back("m" + std::to_string(t));
        data.curveNames.push_back("q" + std::to_string(t));
    }
    data.rayClasses.assign(dg.numEdges(),
                           std::vector<long long>(numClasses, 0));
    for (int i = 0; i < l; ++i)
        for (int e : paths[i]) data.rayClasses[e][i] = 1;
    for (int b = 0; b < nb; ++b) {
        const std::vector<int>& plus =
            flipped[b] ? dg.boxes[b].cornerOpp : dg.boxes[b].corner;
        const std::vector<int>& minus =
            flipped[b] ? dg.boxes[b].corner : dg.boxes[b].cornerOpp;
        for (int e : plus) data.rayClasses[e][l + b] += 1;
        for (int e : minus) data.rayClasses[e][l + b] -= 1;
    }
    data.c1.assign(numClasses, 0);
    for (const auto& row : data.rayClasses)
        for (int t = 0; t < numClasses; ++t) data.c1[t] += row[t];
    return data;
}

std::optional<LadderCandidate> buildCandidate(
    const LadderDiagram& dg, const std::vector<RayVec>& rays,
    const SingularFan& sing, std::uint32_t orientation, std::string& whyNot) {
    const int nb = static_cast<int>(dg.boxes.size());
    std::vector<bool> flipped(nb, false);
    std::vector<std::vector<int>> corners;
    EdgeMask cornerMask = 0;
    for (int b = 0; b < nb; ++b) {
        flipped[b] = (orientation >> b & 1) != 0;
        corners.push_back(flipped[b] ? dg.boxes[b].cornerOpp
                                     : dg.boxes[b].corner);
        cornerMask |= maskOf(corners.back());
    }

    std::optional<std::vector<std::vector<int>>> paths =
        walkPaths(dg, cornerMask, whyNot);
    if (!paths) return std::nullopt;

    std::vector<std::vector<int>> collections = *paths;
    collections.insert(collections.end(), corners.begin(), corners.end());

    LadderCandidate cand;
    cand.flipped = std::move(flipped);
    cand.pathCollections = *paths;
    cand.boxCollections = std::move(corners);
    cand.fan.dim = dg.numDots();
    cand.fan.rays = rays;
    cand.fan.maxCones = maximalAvoidingSets(dg.numEdges(), collections);

    try {
        check_well_formed(cand.fan);
    } catch (const StructuralError& err) {
        whyNot = std::string("fan is malformed: ") + err.what();
        return std::nullopt;
    }
    FanReport report = validate_fan(cand.fan);
    if (!report.allGood()) {
        whyNot = "fan fails validation:";
        if (!report.simplicial) whyNot += " not simplicial;";
        if (!report.smooth) whyNot += " not smooth;";
        if (!report.fullDimensional) whyNot += " cones not full-dimensional;";
        if (!report.facetPairing) whyNot += " facet pairing broken;";
        if (!report.samplingCovered) whyNot += " direction sampling uncovered;";
        if (!report.samplingInjective) whyNot += " overlapping cones detected;";
        return std::nullopt;
    }

    std::vector<std::vector<int>> wanted = collections;
    for (auto& c : wanted) std::sort(c.begin(), c.end());
    std::sort(wanted.begin(), wanted.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return std::pair(a.size(), a) < std::pair(b.size(), b);
              });
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    if (minimal_non_faces(cand.fan) != wanted) {
        whyNot = "minimal non-faces differ from the chosen collections";
        return std::nullopt;
    }

    if (!certifySubdivision(cand.fan, sing, whyNot)) return std::nullopt;

    cand.data = divisorData(dg, cand.pathCollections, cand.flipped);
    try {
        check_divisor_data(cand.fan, cand.data);
    } catch (const Error& err) {
        whyNot = std::string("divisor class data inconsistent: ") + err.what();
        return std::nullopt;
    }
    return cand;
}

} // namespace

RayVec LadderDiagram::rayOf(int edge) const {
    RayVec r(dots.size(), 0);
    auto add = [&](GridPoint v, long long c) {
        auto it = std::find(dots.begin(), dots.end(), v);
        if (it != dots.end()) r[static_cast<size_t>(it - dots.begin())] += c;
    };
    add(edges[edge].head, 1);
    add(edges[edge].tail, -1);
    return r;
}

LadderFans ladder_fans(int n, const std::vector<int>& steps) {
    LadderFans out;
    out.diagram = buildDiagram(n, steps);
    const LadderDiagram& dg = out.diagram;
    if (dg.numEdges() > 31)
        throw UnsupportedFan("ladder: diagram too large (over 31 edges)");

    std::vector<RayVec> rays;
    rays.reserve(dg.numEdges());
    for (int e = 0; e < dg.numEdges(); ++e) rays.push_back(dg.rayOf(e));

    SingularFan sing = buildSingularFan(dg, rays);
    out.fanSing = sing.fan;
    out.hullReflexive = sing.reflexive;
    if (!validate_fan(out.fanSing).pseudoComplete)
        throw ConstructionFailure(
            "ladder: the hull-facet fan fails the pseudo-completeness battery");

    const int nb = static_cast<int>(dg.boxes.size());
    std::vector<std::string> rejections;
    for (std::uint32_t orientation = 0; orientation < (std::uint32_t{1} << nb);
         ++orientation) {
        std::string whyNot;
        std::optional<LadderCandidate> cand =
            buildCandidate(dg, rays, sing, orientation, whyNot);
        if (cand) {
            out.candidates.push_back(std::move(*cand));
        } else {
            std::string bits;
            for (int b = 0; b < nb; ++b)
                bits += (orientation >> b & 1) ? '1' : '0';
            rejections.push_back("orientation [" + bits + "]: " + whyNot);
        }
    }

    if (out.candidates.empty()) {
        std::string msg =
            "ladder: no resolution candidate passed verification";
        for (const std::string& r : rejections) msg += "\n  " + r;
        throw ConstructionFailure(msg);
    }
    return out;
}

} // namespace qct::toric
