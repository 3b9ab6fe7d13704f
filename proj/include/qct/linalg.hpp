/*
 * linalg.hpp
 * ----------
 * Dense exact linear algebra over the scalar field, plus a small generic
 * matrix shell that also serves rational-function-valued matrices
 * (quantum multiplication operators).  Dimensions here are tiny (<= 32),
 * so everything is straightforward Gaussian elimination.
 */
#pragma once

#include <optional>
#include <vector>

#include "qct/errors.hpp"
#include "qct/scalar.hpp"

namespace qct::algebra {

using Vec = std::vector<Scalar>;

[[nodiscard]] bool vecIsZero(const Vec& v);
[[nodiscard]] Vec vecAdd(const Vec& a, const Vec& b);
[[nodiscard]] Vec vecSub(const Vec& a, const Vec& b);
[[nodiscard]] Vec vecScale(const Scalar& c, Vec v);

/// Minimal dense matrix over any ring with +=, *, ==.  The additive
/// zero must be supplied because rational functions carry a variable
/// count even when zero.
template <class F>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, F zero = F())
        : rows_(rows), cols_(cols), zero_(zero), a_(static_cast<size_t>(rows) * cols, zero) {}

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] const F& zero() const { return zero_; }

    F& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    [[nodiscard]] std::vector<F> column(int j) const {
        std::vector<F> c;
        c.reserve(rows_);
        for (int i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }
    void setColumn(int j, const std::vector<F>& c) {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw StructuralError("Mat: shape mismatch in *");
        Mat r(a.rows_, b.cols_, a.zero_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k)
                for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
        return r;
    }
    friend Mat operator+(Mat a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw StructuralError("Mat: shape mismatch in +");
        for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
        return a;
    }
    friend Mat operator-(Mat a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw StructuralError("Mat: shape mismatch in -");
        for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += -b.a_[k];
        return a;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    [[nodiscard]] std::vector<F> apply(const std::vector<F>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw StructuralError("Mat: apply size mismatch");
        std::vector<F> r(rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    int rows_, cols_;
    F zero_;
    std::vector<F> a_;
};

using ScalarMat = Mat<Scalar>;

[[nodiscard]] ScalarMat scalarIdentity(int n);
/// Row-reduce in place to reduced row echelon form; returns the pivot
/// columns (rank = their count).
std::vector<int> rrefInPlace(ScalarMat& m);
[[nodiscard]] int rank(ScalarMat m);
[[nodiscard]] Scalar det(ScalarMat m);
[[nodiscard]] std::optional<ScalarMat> inverse(const ScalarMat& m);
/// One solution of A x = b, if any.
[[nodiscard]] std::optional<Vec> solve(const ScalarMat& a, const Vec& b);
/// Basis of the right kernel of A.
[[nodiscard]] std::vector<Vec> kernelBasis(const ScalarMat& a);

/// A linear subspace of Q(i)^n, stored as an RREF row basis so that
/// membership, comparison and lattice operations are canonical.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient) {}
    [[nodiscard]] static Subspace span(int ambient, const std::vector<Vec>& vectors);

    [[nodiscard]] int ambientDim() const { return ambient_; }
    [[nodiscard]] int dim() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] const std::vector<Vec>& basis() const { return rows_; }

    [[nodiscard]] bool contains(const Vec& v) const;
    [[nodiscard]] bool containsSubspace(const Subspace& o) const;
    [[nodiscard]] Subspace sum(const Subspace& o) const;
    [[nodiscard]] Subspace intersect(const Subspace& o) const;
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int ambient_;
    std::vector<Vec> rows_; // RREF rows, no zero rows
};

/// Coordinates of target in the given (not necessarily independent)
/// spanning vectors, if it lies in their span.
[[nodiscard]] std::optional<Vec> solveInSpan(const std::vector<Vec>& spanning, const Vec& target);

} // namespace qct::algebra
