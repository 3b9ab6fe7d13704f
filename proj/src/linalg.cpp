/*
 * linalg.cpp
 * ----------
 * Exact Gaussian elimination, kernels, and canonical subspaces.
 */
#include "qct/linalg.hpp"

#include <algorithm>

namespace qct::algebra {

bool vecIsZero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.isZero(); });
}

Vec vecAdd(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw StructuralError("vecAdd: size mismatch");
    Vec r = a;
    for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Vec vecSub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw StructuralError("vecSub: size mismatch");
    Vec r = a;
    for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

Vec vecScale(const Scalar& c, Vec v) {
    for (auto& x : v) x *= c;
    return v;
}

ScalarMat scalarIdentity(int n) {
    ScalarMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

std::vector<int> rrefInPlace(ScalarMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).isZero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).isZero()) continue;
            Scalar f = m(i, c);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(ScalarMat m) { return static_cast<int>(rrefInPlace(m).size()); }

Scalar det(ScalarMat m) {
    if (m.rows() != m.cols()) throw StructuralError("det: matrix not square");
    Scalar d(1);
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).isZero()) {
                p = i;
                break;
            }
        if (p < 0) return Scalar(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).isZero()) continue;
            Scalar f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

std::optional<ScalarMat> inverse(const ScalarMat& m) {
    if (m.rows() != m.cols()) throw StructuralError("inverse: matrix not square");
    int n = m.rows();
    ScalarMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    auto pivots = rrefInPlace(aug);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    ScalarMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<Vec> solve(const ScalarMat& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw StructuralError("solve: size mismatch");
    ScalarMat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rrefInPlace(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // inconsistent
    Vec x(a.cols(), Scalar(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), a.cols());
    return x;
}

std::vector<Vec> kernelBasis(const ScalarMat& a) {
    ScalarMat m = a;
    auto pivots = rrefInPlace(m);
    std::vector<bool> isPivot(a.cols(), false);
    for (int c : pivots) isPivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (isPivot[free]) continue;
        Vec v(a.cols(), Scalar(0));
        v[free] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient)
            throw StructuralError("Subspace::span: vector has wrong length");
    ScalarMat m(static_cast<int>(vectors.size()), ambient);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    auto pivots = rrefInPlace(m);
    Subspace s(ambient);
    for (size_t r = 0; r < pivots.size(); ++r) {
        Vec row(ambient);
        for (int j = 0; j < ambient; ++j) row[j] = m(static_cast<int>(r), j);
        s.rows_.push_back(std::move(row));
    }
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw StructuralError("Subspace::contains: vector has wrong length");
    // Reduce v against the RREF rows; membership iff the remainder is 0.
    Vec r = v;
    for (const auto& row : rows_) {
        int lead = 0;
        while (lead < ambient_ && row[lead].isZero()) ++lead;
        if (!r[lead].isZero()) r = vecSub(r, vecScale(r[lead], row));
    }
    return vecIsZero(r);
}

bool Subspace::containsSubspace(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(),
                       [this](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw StructuralError("Subspace::sum: ambient mismatch");
    std::vector<Vec> all = rows_;
    all.insert(all.end(), o.rows_.begin(), o.rows_.end());
    return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw StructuralError("Subspace::intersect: ambient mismatch");
    // x*A = y*B for row bases A, B  <=>  (x,y) in ker [A^T | -B^T].
    int k = dim(), l = o.dim();
    ScalarMat m(ambient_, k + l);
    for (int i = 0; i < ambient_; ++i) {
        for (int j = 0; j < k; ++j) m(i, j) = rows_[j][i];
        for (int j = 0; j < l; ++j) m(i, k + j) = -o.rows_[j][i];
    }
    std::vector<Vec> gens;
    for (const auto& xy : kernelBasis(m)) {
        Vec v(ambient_, Scalar(0));
        for (int j = 0; j < k; ++j)
            if (!xy[j].isZero()) v = vecAdd(v, vecScale(xy[j], rows_[j]));
        gens.push_back(std::move(v));
    }
    return span(ambient_, gens);
}

std::optional<Vec> solveInSpan(const std::vector<Vec>& spanning, const Vec& target) {
    if (spanning.empty()) return vecIsZero(target) ? std::optional<Vec>(Vec{}) : std::nullopt;
    int n = static_cast<int>(spanning.front().size());
    ScalarMat a(n, static_cast<int>(spanning.size()));
    for (int j = 0; j < a.cols(); ++j) {
        if (static_cast<int>(spanning[j].size()) != n)
            throw StructuralError("solveInSpan: ragged spanning set");
        for (int i = 0; i < n; ++i) a(i, j) = spanning[j][i];
    }
    return solve(a, target);
}

} // namespace qct::algebra
