/*
 * series.hpp
 * ----------
 * Truncated multivariate power series with per-variable truncation
 * bounds.  A series knows its coefficients exactly on the downward-closed
 * box {m : m[v] <= bound[v] for all v}; everything outside the box is
 * unknown (not zero!), and all operations only ever claim coefficients
 * inside the box.  Coefficients live in a caller-supplied module C
 * (scalars, vectors, z-expansions, ...) described by CoeffTraits<C>.
 */
#pragma once

#include <map>
#include <vector>

#include "qct/errors.hpp"
#include "qct/polynomial.hpp"
#include "qct/scalar.hpp"

namespace qct::algebra {

/// Customization point: how series treat their coefficient module.
template <class C>
struct CoeffTraits {
    static bool isZero(const C& c) { return c.isZero(); }
};

template <>
struct CoeffTraits<Scalar> {
    static bool isZero(const Scalar& c) { return c.isZero(); }
};

template <class C>
class TruncatedSeries {
public:
    TruncatedSeries(int nvars, std::vector<int> bounds)
        : nvars_(nvars), bounds_(std::move(bounds)) {
        if (static_cast<int>(bounds_.size()) != nvars_)
            throw StructuralError("TruncatedSeries: bounds length != nvars");
    }

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] const std::vector<int>& bounds() const { return bounds_; }
    [[nodiscard]] const std::map<MultiIndex, C>& terms() const { return terms_; }
    [[nodiscard]] bool isZero() const { return terms_.empty(); }

    [[nodiscard]] C coeff(const MultiIndex& m) const {
        if (!m.withinBounds(bounds_))
            throw InsufficientTruncation("TruncatedSeries::coeff: index outside truncation box");
        auto it = terms_.find(m);
        return it == terms_.end() ? C() : it->second;
    }

    /// Add c into the coefficient at m; silently drops indices outside the
    /// box (they are unknowable at this truncation).
    void addTerm(const MultiIndex& m, const C& c) {
        if (m.size() != nvars_) throw StructuralError("TruncatedSeries::addTerm: index size");
        if (!m.withinBounds(bounds_)) return;
        if (CoeffTraits<C>::isZero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (CoeffTraits<C>::isZero(it->second)) terms_.erase(it);
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        checkCompatible(o);
        for (const auto& [m, c] : o.terms_) addTerm(m, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        checkCompatible(o);
        for (const auto& [m, c] : o.terms_) {
            C neg = c;
            neg *= Scalar(-1);
            addTerm(m, neg);
        }
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    TruncatedSeries& operator*=(const Scalar& s) {
        if (s.isZero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    /// Equality of the known coefficients (same box required).
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.checkCompatible(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    int nvars_;
    std::vector<int> bounds_;
    std::map<MultiIndex, C> terms_; // invariant: in-box, nonzero coefficients only

    void checkCompatible(const TruncatedSeries& o) const {
        if (nvars_ != o.nvars_ || bounds_ != o.bounds_)
            throw StructuralError("TruncatedSeries: incompatible truncation boxes");
    }
};

using ScalarSeries = TruncatedSeries<Scalar>;

/// Truncate a polynomial to a series on the given box.
[[nodiscard]] ScalarSeries series_from_poly(const Poly& p, const std::vector<int>& bounds);

/// Cauchy product.  Correct on the whole box because the box is
/// downward closed: every contributing pair of indices lies inside it.
[[nodiscard]] ScalarSeries series_mul(const ScalarSeries& a, const ScalarSeries& b);

/// Series inverse of a polynomial whose constant term is nonzero,
/// computed by the convolution recursion g(m) = -1/c0 * sum f(k)g(m-k).
[[nodiscard]] ScalarSeries series_inverse(const Poly& f, const std::vector<int>& bounds);

} // namespace qct::algebra
