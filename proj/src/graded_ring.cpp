/*
 * graded_ring.cpp
 * ---------------
 * Ring tables, presentations with exact normal forms, lifting of full
 * deformed tables from generator operators, and subquotients.
 */
#include "qct/graded_ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "qct/errors.hpp"

namespace qct::ring {

// ===================================================================
// GradedRing
// ===================================================================

int GradedRing::topDegree() const {
    int t = 0;
    for (int d : degrees) t = std::max(t, d);
    return t;
}

std::vector<RationalFunction> GradedRing::product(int i, int j) const { return ops[i].column(j); }

std::vector<RationalFunction> GradedRing::productVec(const Vec& u, const Vec& v) const {
    std::vector<RationalFunction> r(dim(), rfZero());
    for (int i = 0; i < dim(); ++i) {
        if (u[i].isZero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (v[j].isZero()) continue;
            Scalar c = u[i] * v[j];
            for (int k = 0; k < dim(); ++k) {
                const RationalFunction& t = ops[i](k, j);
                if (!t.isZero()) r[k] += c * t;
            }
        }
    }
    return r;
}

Mat<RationalFunction> GradedRing::opOf(const Vec& u) const {
    Mat<RationalFunction> m(dim(), dim(), rfZero());
    for (int i = 0; i < dim(); ++i) {
        if (u[i].isZero()) continue;
        for (int r = 0; r < dim(); ++r)
            for (int c = 0; c < dim(); ++c) {
                const RationalFunction& t = ops[i](r, c);
                if (!t.isZero()) m(r, c) += u[i] * t;
            }
    }
    return m;
}

Scalar GradedRing::pair(const Vec& u, const Vec& v) const {
    Scalar s(0);
    for (int i = 0; i < dim(); ++i) {
        if (u[i].isZero()) continue;
        for (int j = 0; j < dim(); ++j) s += u[i] * pairing(i, j) * v[j];
    }
    return s;
}

int GradedRing::indexOf(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (basisNames[i] == name) return i;
    throw StructuralError("GradedRing: no basis element named '" + name + "'");
}

// ===================================================================
// Checks
// ===================================================================

CheckReport check_frobenius(const GradedRing& r) {
    CheckReport rep;
    const int n = r.dim();
    auto entry = [&](int i, int j, int k) -> const RationalFunction& { return r.ops[i](k, j); };

    // unit behaves as identity
    for (int j = 0; j < n && rep.ok(); ++j)
        for (int k = 0; k < n; ++k) {
            RationalFunction expect =
                j == k ? RationalFunction::constant(r.qvars(), Scalar(1)) : r.rfZero();
            if (entry(r.unit, j, k) != expect) {
                rep.problems.push_back("unit column broken at " + r.basisNames[j]);
                break;
            }
        }

    // commutativity of the table
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (r.product(i, j) != r.product(j, i))
                rep.problems.push_back("table not commutative at " + r.basisNames[i] + " * " +
                                       r.basisNames[j]);

    // pairing: symmetric, supported on complementary degrees, nondegenerate
    bool symmetric = true;
    for (int i = 0; i < n && symmetric; ++i)
        for (int j = i + 1; j < n; ++j)
            if (r.pairing(i, j) != r.pairing(j, i)) {
                rep.problems.push_back("pairing not symmetric");
                symmetric = false;
                break;
            }
    const int top = r.topDegree();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!r.pairing(i, j).isZero() && r.degrees[i] + r.degrees[j] != top)
                rep.problems.push_back("pairing nonzero off complementary degrees at (" +
                                       r.basisNames[i] + ", " + r.basisNames[j] + ")");
    if (det(r.pairing).isZero()) rep.problems.push_back("pairing degenerate");

    // Frobenius property over all unordered triples
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                RationalFunction a = r.rfZero(), b = r.rfZero(), c = r.rfZero();
                for (int l = 0; l < n; ++l) {
                    if (!entry(i, j, l).isZero() && !r.pairing(l, k).isZero())
                        a += r.pairing(l, k) * entry(i, j, l);
                    if (!entry(j, k, l).isZero() && !r.pairing(l, i).isZero())
                        b += r.pairing(l, i) * entry(j, k, l);
                    if (!entry(i, k, l).isZero() && !r.pairing(l, j).isZero())
                        c += r.pairing(l, j) * entry(i, k, l);
                }
                if (!(a == b && b == c))
                    rep.problems.push_back("Frobenius symmetry fails on (" + r.basisNames[i] +
                                           ", " + r.basisNames[j] + ", " + r.basisNames[k] + ")");
            }
    return rep;
}

CheckReport check_grading(const GradedRing& r) {
    CheckReport rep;
    const int n = r.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const RationalFunction& t = r.ops[i](k, j);
                if (t.isZero()) continue;
                int d = 0;
                if (!t.isHomogeneous(r.qDegrees, &d) ||
                    d != r.degrees[i] + r.degrees[j] - r.degrees[k])
                    rep.problems.push_back("entry (" + r.basisNames[i] + " * " + r.basisNames[j] +
                                           " -> " + r.basisNames[k] +
                                           ") violates the grading: " + t.str(r.qNames));
            }
    return rep;
}

CheckReport check_associativity(const GradedRing& r) {
    CheckReport rep;
    const int n = r.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Mat<RationalFunction> lhs = r.ops[i] * r.ops[j];
            Mat<RationalFunction> rhs(n, n, r.rfZero());
            for (int k = 0; k < n; ++k) {
                const RationalFunction& t = r.ops[i](k, j);
                if (t.isZero()) continue;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (!r.ops[k](a, b).isZero()) rhs(a, b) += t * r.ops[k](a, b);
            }
            if (lhs != rhs)
                rep.problems.push_back("associativity fails for (" + r.basisNames[i] + ", " +
                                       r.basisNames[j] + ")");
        }
    return rep;
}

// ===================================================================
// PresentedRing
// ===================================================================

namespace {

// All exponent vectors of the given weighted degree, in a fixed
// deterministic order (descending lexicographic, so x^2 comes before xy
// before y^2 and greedy bases read conventionally).
void monomialsOfWeightRec(const std::vector<int>& w, size_t v, int d, MultiIndex& cur,
                          std::vector<MultiIndex>& out) {
    if (v + 1 == w.size()) {
        if (d % w[v] == 0) {
            cur[static_cast<int>(v)] = d / w[v];
            out.push_back(cur);
            cur[static_cast<int>(v)] = 0;
        }
        return;
    }
    for (int e = d / w[v]; e >= 0; --e) {
        cur[static_cast<int>(v)] = e;
        monomialsOfWeightRec(w, v + 1, d - e * w[v], cur, out);
    }
    cur[static_cast<int>(v)] = 0;
}

std::vector<MultiIndex> monomialsOfWeight(const std::vector<int>& weights, int d) {
    std::vector<MultiIndex> out;
    if (weights.empty()) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    MultiIndex cur(static_cast<int>(weights.size()));
    monomialsOfWeightRec(weights, 0, d, cur, out);
    return out;
}

// Weighted degree of a polynomial already known to be homogeneous.
int weightedDegreeOf(const Poly& p, const std::vector<int>& weights) {
    int d = 0;
    if (!p.isHomogeneous(weights, &d))
        throw StructuralError("PresentedRing: expected a homogeneous polynomial");
    return d;
}

} // namespace

PresentedRing::PresentedRing(std::vector<std::string> generators, std::vector<int> genDegrees,
                             std::vector<Poly> relations, std::optional<std::vector<Poly>> basis,
                             std::pair<Poly, Scalar> integralOf)
    : gens_(std::move(generators)), genDegrees_(std::move(genDegrees)),
      relations_(std::move(relations)) {
    const int g = static_cast<int>(gens_.size());
    if (static_cast<int>(genDegrees_.size()) != g)
        throw StructuralError("PresentedRing: generator/degree count mismatch");
    for (int d : genDegrees_)
        if (d <= 0 || d % 2 != 0)
            throw StructuralError("PresentedRing: generator degrees must be positive and even");
    for (const auto& r : relations_) {
        if (r.nvars() != g) throw StructuralError("PresentedRing: relation variable count");
        if (!r.isHomogeneous(genDegrees_))
            throw PresentationError("PresentedRing: inhomogeneous relation " + r.str(gens_));
    }

    const bool chooseBasis = !basis.has_value();
    if (!chooseBasis) {
        basisExprs_ = std::move(*basis);
        if (basisExprs_.empty()) throw StructuralError("PresentedRing: empty basis");
        for (const auto& b : basisExprs_) {
            if (b.nvars() != g) throw StructuralError("PresentedRing: basis variable count");
            if (b.isZero() || !b.isHomogeneous(genDegrees_))
                throw PresentationError(
                    "PresentedRing: basis elements must be nonzero and homogeneous");
        }
    }

    // Determine the top degree: an explicit basis pins it; otherwise grow
    // a greedy monomial basis until enough consecutive degrees come out
    // empty.  The quotient is generated in the generator degrees, so once
    // every degree in a window of width max(genDegree) is zero, all
    // higher ones are too.
    int top = 0;
    if (!chooseBasis) {
        for (const auto& b : basisExprs_)
            top = std::max(top, weightedDegreeOf(b, genDegrees_));
        topGenDegree_ = top;
        for (int d = 0; d <= 2 * top; d += 2) buildDegree(d, false);
    } else {
        const int maxW = *std::max_element(genDegrees_.begin(), genDegrees_.end());
        int zeroRun = 0;
        int d = 0;
        for (; d <= 200; d += 2) {
            size_t before = basisExprs_.size();
            buildDegree(d, true);
            if (basisExprs_.size() == before) {
                zeroRun += 2;
                if (zeroRun >= maxW && d >= maxW) break;
            } else {
                zeroRun = 0;
                top = d;
            }
        }
        if (d > 200)
            throw PresentationError("PresentedRing: quotient not finite-dimensional by degree "
                                    "200; the ideal is too small");
        topGenDegree_ = top;
        for (int e = 0; e <= 2 * top; e += 2) buildDegree(e, false);
    }

    // Assemble the ring table.
    const int n = static_cast<int>(basisExprs_.size());
    ring_.basisNames.reserve(n);
    for (const auto& b : basisExprs_) ring_.basisNames.push_back(b.str(gens_));
    ring_.degrees.resize(n);
    for (int i = 0; i < n; ++i) ring_.degrees[i] = weightedDegreeOf(basisExprs_[i], genDegrees_);
    ring_.unit = -1;
    for (int i = 0; i < n; ++i)
        if (ring_.degrees[i] == 0) {
            if (!(basisExprs_[i] - Poly::constant(g, Scalar(1))).isZero())
                throw PresentationError("PresentedRing: degree-0 basis element is not 1");
            if (ring_.unit >= 0)
                throw PresentationError("PresentedRing: several degree-0 basis elements");
            ring_.unit = i;
        }
    if (ring_.unit < 0) throw PresentationError("PresentedRing: no unit in the basis");

    ring_.ops.assign(n, Mat<RationalFunction>(n, n, RationalFunction(Poly(0))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec col = reduce(basisExprs_[i] * basisExprs_[j]);
            for (int k = 0; k < n; ++k)
                if (!col[k].isZero())
                    ring_.ops[i](k, j) = RationalFunction(Poly::constant(0, col[k]));
        }

    // Integral normalization: a one-dimensional top piece is required,
    // and integral(normPoly) = normValue fixes the scale.
    auto& [normPoly, normValue] = integralOf;
    if (normPoly.nvars() != g)
        throw StructuralError("PresentedRing: normalization variable count");
    int topCount = 0;
    for (int i = 0; i < n; ++i)
        if (ring_.degrees[i] == topGenDegree_) {
            ++topCount;
            topIndex_ = i;
        }
    if (topCount != 1)
        throw PresentationError("PresentedRing: top graded piece is not one-dimensional");
    Vec nf = reduce(normPoly);
    if (nf[topIndex_].isZero())
        throw PresentationError("PresentedRing: normalization element vanishes in top degree");
    topIntegral_ = normValue / nf[topIndex_];

    ring_.pairing = ScalarMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar v = integral(basisExprs_[i] * basisExprs_[j]);
            ring_.pairing(i, j) = v;
            ring_.pairing(j, i) = v;
        }
}

void PresentedRing::buildDegree(int d, bool chooseBasis) {
    if (degreesBuilt_.count(d)) return;
    std::vector<MultiIndex> mons = monomialsOfWeight(genDegrees_, d);
    if (mons.empty()) {
        degreesBuilt_.insert(d);
        degreeIndices_[d] = {};
        return;
    }
    std::map<MultiIndex, int> row;
    for (size_t k = 0; k < mons.size(); ++k) row[mons[k]] = static_cast<int>(k);
    const int nrows = static_cast<int>(mons.size());

    auto columnOf = [&](const Poly& p) {
        Vec col(nrows, Scalar(0));
        for (const auto& [m, c] : p.terms()) {
            auto it = row.find(m);
            if (it == row.end())
                throw StructuralError("PresentedRing: inhomogeneous column in degree build");
            col[it->second] = c;
        }
        return col;
    };

    // Relation multiples spanning the degree-d piece of the ideal.
    std::vector<Vec> relCols;
    for (const auto& r : relations_) {
        if (r.isZero()) continue;
        const int e = weightedDegreeOf(r, genDegrees_);
        if (e > d) continue;
        for (const auto& m : monomialsOfWeight(genDegrees_, d - e))
            relCols.push_back(columnOf(r * Poly::monomial(m, Scalar(1))));
    }
    const int rr = static_cast<int>(relCols.size());

    // Basis columns for this degree.
    std::vector<Poly> degBasis;
    if (chooseBasis) {
        // Greedy: keep monomials (in enumeration order) independent of the
        // ideal plus the ones already kept.
        std::vector<Vec> chosen = relCols;
        auto rankOf = [&](const std::vector<Vec>& cols) {
            ScalarMat m(nrows, static_cast<int>(cols.size()));
            for (int j = 0; j < m.cols(); ++j)
                for (int i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
            return rank(m);
        };
        int currentRank = rankOf(chosen);
        for (const auto& mon : mons) {
            Vec cand(nrows, Scalar(0));
            cand[row[mon]] = Scalar(1);
            chosen.push_back(cand);
            if (rankOf(chosen) > currentRank) {
                ++currentRank;
                degBasis.push_back(Poly::monomial(mon, Scalar(1)));
            } else {
                chosen.pop_back();
            }
        }
        for (const auto& b : degBasis) basisExprs_.push_back(b);
    } else {
        for (const auto& b : basisExprs_)
            if (weightedDegreeOf(b, genDegrees_) == d) degBasis.push_back(b);
    }
    const int kk = static_cast<int>(degBasis.size());

    // Rank conditions: relations + basis must span the whole degree, and
    // the basis must be independent of the ideal.  Both failures are
    // presentation defects, reported with the offending degree.
    {
        ScalarMat both(nrows, rr + kk);
        for (int j = 0; j < rr; ++j)
            for (int i = 0; i < nrows; ++i) both(i, j) = relCols[j][i];
        for (int j = 0; j < kk; ++j) {
            Vec col = columnOf(degBasis[j]);
            for (int i = 0; i < nrows; ++i) both(i, rr + j) = col[i];
        }
        ScalarMat relOnly(nrows, rr);
        for (int j = 0; j < rr; ++j)
            for (int i = 0; i < nrows; ++i) relOnly(i, j) = relCols[j][i];
        const int bothRank = rank(both);
        if (bothRank != nrows)
            throw PresentationError("PresentedRing: basis + relations do not span degree " +
                                    std::to_string(d));
        if (rank(relOnly) + kk != bothRank)
            throw PresentationError(
                "PresentedRing: basis not independent of the ideal in degree " +
                std::to_string(d));
    }

    // Solve [REL | B] x = mu for every monomial mu at once by reducing
    // [REL | B | I].  The block [REL | B] has full row rank, so every
    // pivot lands inside it and each identity column carries a particular
    // solution.  Any two solutions differ by the kernel, whose B-part is
    // zero (B is independent of REL), so the B-part read off here is the
    // unique normal form.
    ScalarMat aug(nrows, rr + kk + nrows);
    for (int j = 0; j < rr; ++j)
        for (int i = 0; i < nrows; ++i) aug(i, j) = relCols[j][i];
    for (int j = 0; j < kk; ++j) {
        Vec col = columnOf(degBasis[j]);
        for (int i = 0; i < nrows; ++i) aug(i, rr + j) = col[i];
    }
    for (int i = 0; i < nrows; ++i) aug(i, rr + kk + i) = Scalar(1);
    const std::vector<int> pivots = rrefInPlace(aug);
    for (int t = 0; t < nrows; ++t) {
        Vec coeffs(kk, Scalar(0));
        for (size_t prow = 0; prow < pivots.size(); ++prow) {
            const int pc = pivots[prow];
            if (pc >= rr + kk)
                throw PresentationError(
                    "PresentedRing: inconsistent normal-form system in degree " +
                    std::to_string(d));
            if (pc >= rr) coeffs[pc - rr] = aug(static_cast<int>(prow), rr + kk + t);
        }
        normalForms_[mons[t]] = {d, std::move(coeffs)};
    }

    // Record which global basis indices the degree-d slice occupies.
    std::vector<int> idx;
    for (size_t i = 0; i < basisExprs_.size(); ++i)
        if (weightedDegreeOf(basisExprs_[i], genDegrees_) == d) idx.push_back(static_cast<int>(i));
    if (static_cast<int>(idx.size()) != kk)
        throw PresentationError("PresentedRing: degree bookkeeping mismatch");
    degreeIndices_[d] = std::move(idx);
    degreesBuilt_.insert(d);
}

Vec PresentedRing::reduce(const Poly& p) const {
    if (p.nvars() != static_cast<int>(gens_.size()))
        throw StructuralError("PresentedRing::reduce: variable count mismatch");
    const int n = static_cast<int>(basisExprs_.size());
    Vec out(n, Scalar(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = normalForms_.find(m);
        if (it == normalForms_.end())
            throw StructuralError("PresentedRing::reduce: monomial " + m.str(gens_) +
                                  " of degree " + std::to_string(m.degree(genDegrees_)) +
                                  " beyond the precomputed range");
        const auto& [d, coeffs] = it->second;
        const auto& idx = degreeIndices_.at(d);
        for (size_t k = 0; k < coeffs.size(); ++k)
            if (!coeffs[k].isZero()) out[idx[k]] += c * coeffs[k];
    }
    return out;
}

Scalar PresentedRing::integral(const Poly& p) const {
    Vec nf = reduce(p);
    return nf[topIndex_] * topIntegral_;
}

PresentedRing ring_from_presentation(std::vector<std::string> generators,
                                     std::vector<int> genDegrees, std::vector<Poly> relations,
                                     std::optional<std::vector<Poly>> basis,
                                     std::pair<Poly, Scalar> integralOf) {
    return PresentedRing(std::move(generators), std::move(genDegrees), std::move(relations),
                         std::move(basis), std::move(integralOf));
}

// ===================================================================
// Lifting
// ===================================================================

GradedRing quantum_ring_from_generator_matrices(
    const PresentedRing& classical, const std::vector<int>& generatorIndices,
    const std::vector<Mat<RationalFunction>>& generatorOps, std::vector<std::string> qNames,
    std::vector<int> qDegrees) {
    const GradedRing& cl = classical.ring();
    const int n = cl.dim();
    const int nq = static_cast<int>(qNames.size());
    if (qNames.size() != qDegrees.size())
        throw StructuralError("lift: q name/degree count mismatch");
    if (generatorIndices.size() != generatorOps.size())
        throw StructuralError("lift: generator index/operator count mismatch");
    for (const auto& m : generatorOps)
        if (m.rows() != n || m.cols() != n) throw StructuralError("lift: operator shape mismatch");

    GradedRing out;
    out.basisNames = cl.basisNames;
    out.degrees = cl.degrees;
    out.qNames = std::move(qNames);
    out.qDegrees = std::move(qDegrees);
    out.unit = cl.unit;
    out.pairing = cl.pairing;
    const RationalFunction zero{Poly(nq)};
    out.ops.assign(n, Mat<RationalFunction>(n, n, zero));

    std::vector<bool> resolved(n, false);
    for (int k = 0; k < n; ++k)
        out.ops[cl.unit](k, k) = RationalFunction::constant(nq, Scalar(1));
    resolved[cl.unit] = true;
    for (size_t g = 0; g < generatorIndices.size(); ++g) {
        out.ops[generatorIndices[g]] = generatorOps[g];
        resolved[generatorIndices[g]] = true;
    }

    // Each remaining basis element b is decomposed classically as
    // sum lambda (gen * psi) with deg psi < deg b; then
    //   Op(b) = sum lambda M_gen Op(psi) - sum_k c_k Op(b_k),
    // where sum lambda M_gen e_psi = e_b + sum_k c_k e_k defines the
    // correction coefficients c_k (deformation-dependent, possibly
    // hitting elements of the same degree).  Elements are processed in
    // degree order, and sweeps repeat until every correction references
    // only resolved elements; a correction onto the element itself, or a
    // cycle, is unliftable this way and reported.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cl.degrees[a] < cl.degrees[b]; });

    bool progress = true;
    while (progress) {
        progress = false;
        for (int t : order) {
            if (resolved[t]) continue;
            const int d = cl.degrees[t];
            std::vector<Vec> cols;
            std::vector<std::pair<size_t, int>> colMeta; // (generator slot, psi index)
            for (size_t g = 0; g < generatorIndices.size(); ++g) {
                const int gi = generatorIndices[g];
                for (int psi = 0; psi < n; ++psi) {
                    if (cl.degrees[psi] + cl.degrees[gi] != d) continue;
                    cols.push_back(classical.reduce(classical.basisExprs()[gi] *
                                                    classical.basisExprs()[psi]));
                    colMeta.emplace_back(g, psi);
                }
            }
            Vec target(n, Scalar(0));
            target[t] = Scalar(1);
            const auto lambda = algebra::solveInSpan(cols, target);
            if (!lambda)
                throw ConstructionFailure("lift: basis element " + cl.basisNames[t] +
                                          " is not generated by the chosen generators");

            std::vector<RationalFunction> v(n, zero);
            for (size_t c = 0; c < cols.size(); ++c) {
                if ((*lambda)[c].isZero()) continue;
                const auto& [g, psi] = colMeta[c];
                for (int k = 0; k < n; ++k) {
                    const RationalFunction& e = generatorOps[g](k, psi);
                    if (!e.isZero()) v[k] += (*lambda)[c] * e;
                }
            }
            std::vector<RationalFunction> corr = v;
            corr[t] -= RationalFunction::constant(nq, Scalar(1));
            if (!corr[t].isZero())
                throw ConstructionFailure("lift: " + cl.basisNames[t] +
                                          " appears in its own correction term");
            bool ready = true;
            for (size_t c = 0; c < cols.size() && ready; ++c)
                if (!(*lambda)[c].isZero() && !resolved[colMeta[c].second]) ready = false;
            for (int k = 0; k < n && ready; ++k)
                if (!corr[k].isZero() && !resolved[k]) ready = false;
            if (!ready) continue; // other same-degree elements first; retry next sweep

            Mat<RationalFunction> op(n, n, zero);
            for (size_t c = 0; c < cols.size(); ++c) {
                if ((*lambda)[c].isZero()) continue;
                const auto& [g, psi] = colMeta[c];
                Mat<RationalFunction> prod = generatorOps[g] * out.ops[psi];
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (!prod(a, b).isZero()) op(a, b) += (*lambda)[c] * prod(a, b);
            }
            for (int k = 0; k < n; ++k) {
                if (corr[k].isZero()) continue;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (!out.ops[k](a, b).isZero()) op(a, b) -= corr[k] * out.ops[k](a, b);
            }
            out.ops[t] = std::move(op);
            resolved[t] = true;
            progress = true;
        }
    }
    for (int i = 0; i < n; ++i)
        if (!resolved[i])
            throw ConstructionFailure("lift: cyclic same-degree corrections block " +
                                      cl.basisNames[i]);
    return out;
}

// ===================================================================
// Subquotient
// ===================================================================

namespace {

// Least common denominator of a coordinate vector, as a factor list.
std::vector<RationalFunction::Factor> commonDenominator(const std::vector<RationalFunction>& v) {
    std::map<Poly, int> mult;
    for (const auto& f : v)
        for (const auto& [p, m] : f.denominator()) mult[p] = std::max(mult[p], m);
    return {mult.begin(), mult.end()};
}

} // namespace

Subquotient subquotient(const GradedRing& r, const SubquotientSpec& spec) {
    const int n = r.dim();
    const int nq = r.qvars();
    if (spec.vList.size() != spec.vNames.size())
        throw StructuralError("subquotient: V names/vectors mismatch");
    {
        std::set<int> seen(spec.evalOnes.begin(), spec.evalOnes.end());
        seen.insert(spec.keepVars.begin(), spec.keepVars.end());
        if (static_cast<int>(seen.size()) != nq ||
            static_cast<int>(spec.evalOnes.size() + spec.keepVars.size()) != nq)
            throw StructuralError("subquotient: evalOnes/keepVars must partition the variables");
    }

    Subquotient out{GradedRing{}, {}, {}, Subspace::span(n, spec.vList),
                    Subspace::span(n, spec.wList)};
    if (!out.vSpan.containsSubspace(out.wSpan))
        throw StructuralError("subquotient: W is not contained in the span of V");

    // Representatives: greedy over the V list modulo W.
    Subspace accum = out.wSpan;
    for (size_t i = 0; i < spec.vList.size(); ++i) {
        if (accum.contains(spec.vList[i])) continue;
        accum = accum.sum(Subspace::span(n, {spec.vList[i]}));
        out.repIndices.push_back(static_cast<int>(i));
        out.reps.push_back(spec.vList[i]);
    }
    const int m = static_cast<int>(out.reps.size());

    // Kept-variable projection.
    std::vector<int> varMap(nq, -1);
    for (size_t k = 0; k < spec.keepVars.size(); ++k)
        varMap[spec.keepVars[k]] = static_cast<int>(k);
    const int newNq = static_cast<int>(spec.keepVars.size());

    GradedRing& q = out.ring;
    for (int v : spec.keepVars) {
        q.qNames.push_back(r.qNames[v]);
        q.qDegrees.push_back(r.qDegrees[v]);
    }
    const RationalFunction qzero{Poly(newNq)};

    // Basis metadata: names, degrees (representatives must be homogeneous
    // in the ambient grading), unit.
    q.unit = -1;
    for (int s = 0; s < m; ++s) {
        q.basisNames.push_back(spec.vNames[out.repIndices[s]]);
        int deg = -1;
        for (int k = 0; k < n; ++k)
            if (!out.reps[s][k].isZero()) {
                if (deg < 0)
                    deg = r.degrees[k];
                else if (deg != r.degrees[k])
                    throw StructuralError("subquotient: representative " + q.basisNames.back() +
                                          " is not homogeneous");
            }
        q.degrees.push_back(deg < 0 ? 0 : deg);
        Vec unitVec(n, Scalar(0));
        unitVec[r.unit] = Scalar(1);
        if (out.reps[s] == unitVec) q.unit = s;
    }
    if (q.unit < 0) throw StructuralError("subquotient: V contains no unit representative");

    // Pairing: well defined on V/W iff W pairs to zero against V.
    for (const auto& w : spec.wList)
        for (const auto& v : spec.vList)
            if (!r.pair(w, v).isZero())
                throw DegeneratePairing("subquotient: the pairing does not kill W against V");
    q.pairing = ScalarMat(m, m);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) q.pairing(s, t) = r.pair(out.reps[s], out.reps[t]);
    if (det(q.pairing).isZero())
        throw DegeneratePairing("subquotient: induced pairing is degenerate");

    // Per-monomial membership of a coordinate vector of rational
    // functions in a subspace: clear the least common denominator and
    // test each polynomial coefficient.  Returns the cleared numerators.
    auto checkMembership = [&](const std::vector<RationalFunction>& vec, const Subspace& space,
                               const std::string& what) {
        const auto den = commonDenominator(vec);
        Poly dpoly = Poly::constant(nq, Scalar(1));
        for (const auto& [f, mm] : den)
            for (int k = 0; k < mm; ++k) dpoly = dpoly * f;
        std::vector<Poly> nums(n, Poly(nq));
        std::set<MultiIndex> monos;
        for (int k = 0; k < n; ++k) {
            RationalFunction cleared = RationalFunction(dpoly) * vec[k];
            if (!cleared.isPolynomial())
                throw StructuralError("subquotient: denominator clearing failed");
            nums[k] = cleared.numerator();
            for (const auto& term : nums[k].terms()) monos.insert(term.first);
        }
        for (const auto& mo : monos) {
            Vec coef(n, Scalar(0));
            for (int k = 0; k < n; ++k) coef[k] = nums[k].coeff(mo);
            if (!space.contains(coef))
                throw NotClosed("subquotient: " + what + " leaves the target space at " +
                                mo.str(r.qNames));
        }
        return nums;
    };

    // W absorbs V * W at the evaluation point.
    std::vector<Vec> wBasis = out.wSpan.basis();
    for (const auto& vv : spec.vList)
        for (const auto& ww : wBasis) {
            std::vector<RationalFunction> prod = r.productVec(vv, ww);
            for (auto& e : prod)
                for (int ev : spec.evalOnes) e = e.substituteOne(ev);
            checkMembership(prod, out.wSpan, "a V * W product");
        }

    // Products of representatives: closure in V, then coordinates mod W.
    std::vector<Vec> solveCols = out.reps;
    solveCols.insert(solveCols.end(), wBasis.begin(), wBasis.end());
    q.ops.assign(m, Mat<RationalFunction>(m, m, qzero));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            std::vector<RationalFunction> prod = r.productVec(out.reps[s], out.reps[t]);
            for (auto& e : prod)
                for (int ev : spec.evalOnes) e = e.substituteOne(ev);
            const std::vector<Poly> nums = checkMembership(
                prod, out.vSpan, "product " + q.basisNames[s] + " * " + q.basisNames[t]);
            const auto den = commonDenominator(prod);
            std::set<MultiIndex> monos;
            for (int k = 0; k < n; ++k)
                for (const auto& term : nums[k].terms()) monos.insert(term.first);
            std::vector<Poly> coordNum(m, Poly(nq));
            for (const auto& mo : monos) {
                Vec coef(n, Scalar(0));
                for (int k = 0; k < n; ++k) coef[k] = nums[k].coeff(mo);
                // solveCols = representatives followed by a basis of W:
                // linearly independent, so the coordinates are unique.
                const auto x = algebra::solveInSpan(solveCols, coef);
                if (!x) throw NotClosed("subquotient: decomposition failed unexpectedly");
                for (int rep = 0; rep < m; ++rep)
                    if (!(*x)[rep].isZero()) coordNum[rep].addTerm(mo, (*x)[rep]);
            }
            for (int rep = 0; rep < m; ++rep) {
                if (coordNum[rep].isZero()) continue;
                RationalFunction entry(coordNum[rep], den);
                q.ops[s](rep, t) = entry.renameVars(varMap, newNq);
            }
        }

    return out;
}

} // namespace qct::ring
