/*
 * fan.cpp
 * -------
 * Fans: structural checks, exact validation (simplicial / smooth /
 * pseudo-complete battery), plain-text IO, equality up to ray matching
 * and up to unimodular change of coordinates, and two small factories.
 *
 * Everything is exact rational linear algebra; the only randomness is
 * the direction sampling in the completeness battery, driven by a fixed
 * seed and reduced to coordinates in a platform-independent way.
 */
#include "qct/fan.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "qct/errors.hpp"

namespace qct::toric {

namespace {

// ===================================================== small utilities ====

/// d x k matrix whose columns are the chosen rays.
ScalarMat rayColumns(const Fan& fan, const std::vector<int>& idx) {
    ScalarMat m(fan.dim, static_cast<int>(idx.size()));
    for (int c = 0; c < static_cast<int>(idx.size()); ++c)
        for (int r = 0; r < fan.dim; ++r)
            m(r, c) = Scalar(static_cast<long>(fan.rays[idx[c]][r]));
    return m;
}

/// k x d matrix whose rows are the chosen rays (for kernel computations).
ScalarMat rayRows(const Fan& fan, const std::vector<int>& idx) {
    ScalarMat m(static_cast<int>(idx.size()), fan.dim);
    for (int r = 0; r < static_cast<int>(idx.size()); ++r)
        for (int c = 0; c < fan.dim; ++c)
            m(r, c) = Scalar(static_cast<long>(fan.rays[idx[r]][c]));
    return m;
}

[[nodiscard]] Scalar dotWithRay(const Vec& u, const RayVec& ray) {
    Scalar s;
    for (std::size_t t = 0; t < ray.size(); ++t)
        s += u[t] * Scalar(static_cast<long>(ray[t]));
    return s;
}

/// Visits every k-subset of `items`, in lexicographic position order.
template <typename Fn>
void forEachSubset(const std::vector<int>& items, int k, Fn&& fn) {
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return;
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<int> chosen(k);
    while (true) {
        for (int t = 0; t < k; ++t) chosen[t] = items[pos[t]];
        fn(chosen);
        int t = k - 1;
        while (t >= 0 && pos[t] == n - k + t) --t;
        if (t < 0) break;
        ++pos[t];
        for (int s = t + 1; s < k; ++s) pos[s] = pos[s - 1] + 1;
    }
}

[[nodiscard]] bool isNonnegativeReal(const Scalar& s) {
    return s.im() == 0 && s.re() >= 0;
}

/// A rational matrix entry as an integer, if it is one (and small).
[[nodiscard]] std::optional<long long> asInteger(const Scalar& s) {
    if (s.im() != 0) return std::nullopt;
    const mpq_class& q = s.re();
    if (q.get_den() != 1) return std::nullopt;
    if (!q.get_num().fits_slong_p()) return std::nullopt;
    return static_cast<long long>(q.get_num().get_si());
}

// ================================================ smoothness of a cone ====

/// A simplicial cone is smooth iff its rays extend to a lattice basis;
/// for a full-dimensional cone that is |det| = 1, and in general the gcd
/// of the maximal minors of the ray matrix must be 1.
[[nodiscard]] bool simplicialConeIsSmooth(const Fan& fan, const std::vector<int>& cone) {
    const int k = static_cast<int>(cone.size());
    if (k == fan.dim) {
        const Scalar d = algebra::det(rayColumns(fan, cone));
        return d.im() == 0 && (d.re() == 1 || d.re() == -1);
    }
    std::vector<int> rowIdx(fan.dim);
    std::iota(rowIdx.begin(), rowIdx.end(), 0);
    mpz_class g = 0;
    forEachSubset(rowIdx, k, [&](const std::vector<int>& rows) {
        ScalarMat m(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                m(r, c) = Scalar(static_cast<long>(fan.rays[cone[c]][rows[r]]));
        const Scalar d = algebra::det(m);
        g = gcd(g, d.re().get_num());
    });
    return g == 1 || g == -1;
}

// ============================================= facets of a maximal cone ====

/// All codimension-one faces of a full-dimensional cone, each as the
/// sorted set of the cone's rays lying on the supporting hyperplane.
/// Works for non-simplicial cones: a (dim-1)-subset of rays contributes
/// only when its span is a genuine supporting hyperplane (all other rays
/// strictly on one side).
[[nodiscard]] std::set<std::vector<int>> facetsOfCone(const Fan& fan, const std::vector<int>& cone) {
    std::set<std::vector<int>> out;
    forEachSubset(cone, fan.dim - 1, [&](const std::vector<int>& sub) {
        const std::vector<Vec> ker = algebra::kernelBasis(rayRows(fan, sub));
        if (ker.size() != 1) return;  // subset not of rank dim-1
        const Vec& u = ker[0];
        bool pos = false, neg = false;
        std::vector<int> onHyperplane;
        for (int j : cone) {
            const Scalar s = dotWithRay(u, fan.rays[j]);
            if (s.im() != 0) throw StructuralError("fan: non-real hyperplane value");
            if (s.re() > 0) pos = true;
            else if (s.re() < 0) neg = true;
            else onHyperplane.push_back(j);
        }
        if (pos == neg) return;  // mixed signs, or u orthogonal to the cone
        // rank(sub) = dim-1 and sub is contained in onHyperplane, which
        // itself lies in a hyperplane, so the face has rank exactly dim-1.
        out.insert(onHyperplane);
    });
    return out;
}

// ======================================== deterministic direction draws ====

/// Uniform-ish integer in [-bound, bound] from raw engine output; written
/// out by hand so the sampled directions are identical on every platform
/// (std::uniform_int_distribution is implementation-defined).
[[nodiscard]] long long drawCoordinate(std::mt19937_64& rng, long long bound) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<long long>(rng() % span) - bound;
}

} // namespace

// ==================================================== structural check ====

void check_well_formed(const Fan& fan) {
    if (fan.dim < 1) throw StructuralError("fan: dimension must be positive");
    if (fan.rays.empty()) throw StructuralError("fan: no rays");
    if (fan.maxCones.empty()) throw StructuralError("fan: no maximal cones");
    std::set<RayVec> seen;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const RayVec& r = fan.rays[i];
        if (static_cast<int>(r.size()) != fan.dim)
            throw StructuralError("fan: ray " + std::to_string(i + 1) + " has wrong length");
        long long g = 0;
        for (long long v : r) g = std::gcd(g, v < 0 ? -v : v);
        if (g == 0) throw StructuralError("fan: ray " + std::to_string(i + 1) + " is zero");
        if (g != 1) throw StructuralError("fan: ray " + std::to_string(i + 1) + " is not primitive");
        if (!seen.insert(r).second)
            throw StructuralError("fan: duplicate ray " + std::to_string(i + 1));
    }
    for (std::size_t c = 0; c < fan.maxCones.size(); ++c) {
        const std::vector<int>& cone = fan.maxCones[c];
        if (cone.empty())
            throw StructuralError("fan: maximal cone " + std::to_string(c + 1) + " is empty");
        for (std::size_t t = 0; t < cone.size(); ++t) {
            if (cone[t] < 0 || cone[t] >= fan.numRays())
                throw StructuralError("fan: maximal cone " + std::to_string(c + 1) +
                                      " has a ray index out of range");
            if (t > 0 && cone[t] <= cone[t - 1])
                throw StructuralError("fan: maximal cone " + std::to_string(c + 1) +
                                      " indices must be strictly increasing");
        }
    }
    for (std::size_t a = 0; a < fan.maxCones.size(); ++a)
        for (std::size_t b = 0; b < fan.maxCones.size(); ++b) {
            if (a == b) continue;
            if (std::includes(fan.maxCones[b].begin(), fan.maxCones[b].end(),
                              fan.maxCones[a].begin(), fan.maxCones[a].end()))
                throw StructuralError("fan: maximal cone " + std::to_string(a + 1) +
                                      " is contained in cone " + std::to_string(b + 1));
        }
}

// ========================================================== validation ====

FanReport validate_fan(const Fan& fan, const ValidateOptions& opts) {
    check_well_formed(fan);
    FanReport rep;

    // ---- simpliciality and full-dimensionality: exact rank per cone ----
    std::vector<int> coneRank(fan.maxCones.size());
    rep.fullDimensional = true;
    for (std::size_t c = 0; c < fan.maxCones.size(); ++c) {
        const auto& cone = fan.maxCones[c];
        coneRank[c] = algebra::rank(rayColumns(fan, cone));
        if (coneRank[c] != static_cast<int>(cone.size()))
            rep.nonSimplicialCones.push_back(static_cast<int>(c));
        if (coneRank[c] != fan.dim) rep.fullDimensional = false;
    }
    rep.simplicial = rep.nonSimplicialCones.empty();

    // ---- smoothness: determinant / minor-gcd per simplicial cone ----
    for (std::size_t c = 0; c < fan.maxCones.size(); ++c) {
        if (coneRank[c] != static_cast<int>(fan.maxCones[c].size())) continue;
        if (!simplicialConeIsSmooth(fan, fan.maxCones[c]))
            rep.nonSmoothCones.push_back(static_cast<int>(c));
    }
    rep.smooth = rep.simplicial && rep.nonSmoothCones.empty();

    // ---- completeness battery ----
    if (rep.fullDimensional) {
        // Every codimension-one face must be shared by exactly two
        // maximal cones (a boundary facet would appear once).
        std::map<std::vector<int>, int> facetCount;
        for (const auto& cone : fan.maxCones)
            for (const auto& f : facetsOfCone(fan, cone)) ++facetCount[f];
        rep.facetPairing = true;
        for (const auto& [facet, count] : facetCount)
            if (count != 2) rep.facetPairing = false;

        // Seeded rational directions: each must land in a cone, and for a
        // simplicial fan no direction may be strictly interior to two
        // cones (overlapping cones cover every direction and would pass
        // the coverage check alone).
        rep.samplingCovered = true;
        rep.samplingInjective = true;
        std::mt19937_64 rng(opts.seed);
        for (int n = 0; n < opts.sampleCount && rep.samplingCovered &&
                        rep.samplingInjective;
             ++n) {
            Vec v(fan.dim);
            bool allZero = true;
            do {
                allZero = true;
                for (int t = 0; t < fan.dim; ++t) {
                    const long long x = drawCoordinate(rng, opts.coordinateBound);
                    v[t] = Scalar(static_cast<long>(x));
                    if (x != 0) allZero = false;
                }
            } while (allZero);
            if (rep.simplicial) {
                int contained = 0;
                int interior = 0;
                for (const auto& cone : fan.maxCones) {
                    const auto sol = algebra::solve(rayColumns(fan, cone), v);
                    if (!sol) continue;
                    bool inside = true, strict = true;
                    for (const Scalar& x : *sol) {
                        if (!isNonnegativeReal(x)) { inside = false; break; }
                        if (x.isZero()) strict = false;
                    }
                    if (!inside) continue;
                    ++contained;
                    if (strict && ++interior > 1) break;
                }
                if (contained == 0) rep.samplingCovered = false;
                if (interior > 1) rep.samplingInjective = false;
            } else {
                bool covered = false;
                for (const auto& cone : fan.maxCones)
                    if (point_in_cone(fan, cone, v)) { covered = true; break; }
                if (!covered) rep.samplingCovered = false;
            }
        }
        rep.pseudoComplete =
            rep.facetPairing && rep.samplingCovered && rep.samplingInjective;
    }
    return rep;
}

bool point_in_cone(const Fan& fan, const std::vector<int>& coneRays, const Vec& point) {
    if (static_cast<int>(point.size()) != fan.dim)
        throw StructuralError("point_in_cone: point has wrong dimension");
    for (const Scalar& s : point)
        if (s.im() != 0) throw StructuralError("point_in_cone: point must be real");
    const int r = algebra::rank(rayColumns(fan, coneRays));
    if (r == 0) return algebra::vecIsZero(point);

    // Caratheodory: membership iff some independent r-subset of the rays
    // expresses the point with nonnegative coefficients.
    bool found = false;
    forEachSubset(coneRays, r, [&](const std::vector<int>& sub) {
        if (found) return;
        const ScalarMat m = rayColumns(fan, sub);
        if (algebra::rank(m) != r) return;
        const auto sol = algebra::solve(m, point);
        if (!sol) return;
        for (const Scalar& x : *sol)
            if (!isNonnegativeReal(x)) return;
        found = true;
    });
    return found;
}

// ================================================================== IO ====

Fan read_fan_text(const std::string& text) {
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::string> current;
    std::istringstream in(text);
    std::string line;
    auto flush = [&] {
        if (!current.empty()) blocks.push_back(std::move(current));
        current.clear();
    };
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) { flush(); continue; }
        if (line[first] == '#') continue;
        current.push_back(line);
    }
    flush();
    if (blocks.size() != 2)
        throw StructuralError("fan text: expected two blocks (rays, then maximal cones) "
                              "separated by a blank line, found " + std::to_string(blocks.size()));

    auto parseIntegers = [](const std::string& s, const char* what) {
        std::vector<long long> out;
        std::istringstream ss(s);
        long long v = 0;
        while (ss >> v) out.push_back(v);
        if (!ss.eof())
            throw StructuralError(std::string("fan text: malformed ") + what + " line: " + s);
        return out;
    };

    Fan fan;
    for (const std::string& rayLine : blocks[0]) {
        RayVec ray = parseIntegers(rayLine, "ray");
        if (fan.rays.empty()) fan.dim = static_cast<int>(ray.size());
        fan.rays.push_back(std::move(ray));
    }
    for (const std::string& coneLine : blocks[1]) {
        std::vector<int> cone;
        for (long long v : parseIntegers(coneLine, "cone")) {
            if (v < 1 || v > fan.numRays())
                throw StructuralError("fan text: cone index " + std::to_string(v) +
                                      " out of range 1.." + std::to_string(fan.numRays()));
            cone.push_back(static_cast<int>(v) - 1);
        }
        std::sort(cone.begin(), cone.end());
        fan.maxCones.push_back(std::move(cone));
    }
    check_well_formed(fan);
    return fan;
}

Fan read_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open fan file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_fan_text(buf.str());
}

std::string write_fan_text(const Fan& fan) {
    check_well_formed(fan);
    std::ostringstream out;
    out << "# " << fan.numRays() << " rays in Z^" << fan.dim << ", "
        << fan.numMaxCones() << " maximal cones (1-based ray indices)\n";
    for (const RayVec& r : fan.rays) {
        for (std::size_t t = 0; t < r.size(); ++t) out << (t ? " " : "") << r[t];
        out << "\n";
    }
    out << "\n";
    for (const auto& cone : fan.maxCones) {
        for (std::size_t t = 0; t < cone.size(); ++t) out << (t ? " " : "") << cone[t] + 1;
        out << "\n";
    }
    return out.str();
}

void write_fan_file(const std::string& path, const Fan& fan) {
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot open fan file for writing: " + path);
    out << write_fan_text(fan);
    if (!out) throw StructuralError("failed writing fan file: " + path);
}

// ============================================================ equality ====

namespace {

/// Ray-index permutation a -> b from exact vector matching, if one exists.
[[nodiscard]] std::optional<std::vector<int>> matchRays(const Fan& a, const Fan& b) {
    if (a.dim != b.dim || a.numRays() != b.numRays()) return std::nullopt;
    std::map<RayVec, int> bIndex;
    for (int j = 0; j < b.numRays(); ++j) bIndex[b.rays[j]] = j;
    std::vector<int> perm(a.numRays());
    for (int i = 0; i < a.numRays(); ++i) {
        const auto it = bIndex.find(a.rays[i]);
        if (it == bIndex.end()) return std::nullopt;
        perm[i] = it->second;
    }
    return perm;
}

/// Do a's maximal cones, pushed through the ray permutation, equal b's?
[[nodiscard]] bool conesMatch(const Fan& a, const Fan& b, const std::vector<int>& perm) {
    if (a.numMaxCones() != b.numMaxCones()) return false;
    std::set<std::vector<int>> bCones(b.maxCones.begin(), b.maxCones.end());
    for (const auto& cone : a.maxCones) {
        std::vector<int> image;
        image.reserve(cone.size());
        for (int i : cone) image.push_back(perm[i]);
        std::sort(image.begin(), image.end());
        if (bCones.find(image) == bCones.end()) return false;
    }
    return true;
}

} // namespace

bool same_fan(const Fan& a, const Fan& b) {
    const auto perm = matchRays(a, b);
    return perm && conesMatch(a, b, *perm);
}

std::optional<UnimodularMatch> unimodular_match(const Fan& a, const Fan& b) {
    if (a.dim != b.dim || a.numRays() != b.numRays() || a.numMaxCones() != b.numMaxCones())
        return std::nullopt;
    const int d = a.dim;

    // A spanning tuple of a's rays; its images determine the lattice map.
    std::vector<int> basisIdx;
    {
        for (int i = 0; i < a.numRays() && static_cast<int>(basisIdx.size()) < d; ++i) {
            std::vector<int> trial = basisIdx;
            trial.push_back(i);
            if (algebra::rank(rayColumns(a, trial)) == static_cast<int>(trial.size()))
                basisIdx = std::move(trial);
        }
        if (static_cast<int>(basisIdx.size()) < d)
            throw StructuralError("unimodular_match: rays of the first fan do not span the lattice");
    }
    const auto raInv = algebra::inverse(rayColumns(a, basisIdx));

    // Try every assignment of the spanning tuple to distinct rays of b.
    std::vector<int> target(d, -1);
    std::vector<bool> used(static_cast<std::size_t>(b.numRays()), false);
    std::optional<UnimodularMatch> result;

    auto tryAssignment = [&]() -> bool {
        const ScalarMat u = rayColumns(b, target) * (*raInv);
        std::vector<RayVec> rows(static_cast<std::size_t>(d), RayVec(static_cast<std::size_t>(d)));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                const auto v = asInteger(u(r, c));
                if (!v) return false;
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = *v;
            }
        const Scalar dd = algebra::det(u);
        if (!(dd.im() == 0 && (dd.re() == 1 || dd.re() == -1))) return false;

        const Fan mapped = apply_lattice_map(a, rows);
        const auto perm = matchRays(mapped, b);
        if (!perm || !conesMatch(mapped, b, *perm)) return false;
        result = UnimodularMatch{rows, *perm};
        return true;
    };

    std::function<bool(int)> search = [&](int depth) -> bool {
        if (depth == d) return tryAssignment();
        for (int j = 0; j < b.numRays(); ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = true;
            target[depth] = j;
            if (search(depth + 1)) return true;
            used[static_cast<std::size_t>(j)] = false;
        }
        return false;
    };
    search(0);
    return result;
}

Fan apply_lattice_map(const Fan& fan, const std::vector<RayVec>& matrix) {
    if (static_cast<int>(matrix.size()) != fan.dim)
        throw StructuralError("apply_lattice_map: matrix must be dim x dim");
    for (const RayVec& row : matrix)
        if (static_cast<int>(row.size()) != fan.dim)
            throw StructuralError("apply_lattice_map: matrix must be dim x dim");
    Fan out;
    out.dim = fan.dim;
    out.maxCones = fan.maxCones;
    for (const RayVec& r : fan.rays) {
        RayVec img(static_cast<std::size_t>(fan.dim), 0);
        for (int i = 0; i < fan.dim; ++i)
            for (int j = 0; j < fan.dim; ++j)
                img[static_cast<std::size_t>(i)] += matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(j)];
        out.rays.push_back(std::move(img));
    }
    return out;
}

// =========================================================== factories ====

Fan projective_space_fan(int n) {
    if (n < 1) throw StructuralError("projective_space_fan: dimension must be positive");
    Fan fan;
    fan.dim = n;
    for (int i = 0; i < n; ++i) {
        RayVec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        fan.rays.push_back(std::move(e));
    }
    fan.rays.emplace_back(static_cast<std::size_t>(n), -1);
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> cone;
        for (int i = 0; i <= n; ++i)
            if (i != skip) cone.push_back(i);
        fan.maxCones.push_back(std::move(cone));
    }
    return fan;
}

Fan product_fan(const Fan& a, const Fan& b) {
    check_well_formed(a);
    check_well_formed(b);
    Fan out;
    out.dim = a.dim + b.dim;
    for (const RayVec& r : a.rays) {
        RayVec v = r;
        v.resize(static_cast<std::size_t>(out.dim), 0);
        out.rays.push_back(std::move(v));
    }
    for (const RayVec& r : b.rays) {
        RayVec v(static_cast<std::size_t>(a.dim), 0);
        v.insert(v.end(), r.begin(), r.end());
        out.rays.push_back(std::move(v));
    }
    for (const auto& ca : a.maxCones)
        for (const auto& cb : b.maxCones) {
            std::vector<int> cone = ca;
            for (int j : cb) cone.push_back(j + a.numRays());
            out.maxCones.push_back(std::move(cone));
        }
    return out;
}

} // namespace qct::toric
