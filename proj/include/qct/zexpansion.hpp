/*
 * zexpansion.hpp
 * --------------
 * Finite Laurent expansions in one formal variable z, with coefficients
 * in a caller-supplied module C.  Used for the z-structure of cohomology-
 * valued hypergeometric series: each q-monomial carries one of these.
 *
 * Slots below a caller-chosen floor may be pruned; all consumers track
 * which slot range they rely on.
 */
#pragma once

#include <map>

#include "qct/scalar.hpp"
#include "qct/series.hpp"

namespace qct::algebra {

template <class C>
class ZExpansion {
public:
    ZExpansion() = default;

    [[nodiscard]] bool isZero() const { return slots_.empty(); }
    [[nodiscard]] const std::map<int, C>& slots() const { return slots_; }
    [[nodiscard]] bool hasSlot(int p) const { return slots_.count(p) > 0; }
    /// Coefficient of z^p (default-constructed C when absent).
    [[nodiscard]] C slot(int p) const {
        auto it = slots_.find(p);
        return it == slots_.end() ? C() : it->second;
    }
    [[nodiscard]] int maxSlot() const {
        return slots_.empty() ? INT_MIN_SLOT : slots_.rbegin()->first;
    }

    void setSlot(int p, C c) {
        if (CoeffTraits<C>::isZero(c))
            slots_.erase(p);
        else
            slots_[p] = std::move(c);
    }
    void addSlot(int p, const C& c) {
        if (CoeffTraits<C>::isZero(c)) return;
        auto [it, fresh] = slots_.try_emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (CoeffTraits<C>::isZero(it->second)) slots_.erase(it);
        }
    }

    /// Multiply by z^k (shift all slots up by k).
    [[nodiscard]] ZExpansion shifted(int k) const {
        ZExpansion r;
        for (const auto& [p, c] : slots_) r.slots_.emplace(p + k, c);
        return r;
    }

    /// Drop every slot strictly below the floor.
    void prune(int floor) {
        for (auto it = slots_.begin(); it != slots_.end();)
            it = (it->first < floor) ? slots_.erase(it) : std::next(it);
    }

    ZExpansion& operator+=(const ZExpansion& o) {
        for (const auto& [p, c] : o.slots_) addSlot(p, c);
        return *this;
    }
    ZExpansion& operator*=(const Scalar& s) {
        if (s.isZero()) {
            slots_.clear();
            return *this;
        }
        for (auto& [p, c] : slots_) c *= s;
        return *this;
    }

    friend bool operator==(const ZExpansion& a, const ZExpansion& b) {
        return a.slots_ == b.slots_;
    }
    friend bool operator!=(const ZExpansion& a, const ZExpansion& b) { return !(a == b); }

    /// Sentinel for maxSlot() of the zero expansion.
    static constexpr int INT_MIN_SLOT = -1000000;

private:
    std::map<int, C> slots_; // invariant: nonzero coefficients only
};

template <class C>
struct CoeffTraits<ZExpansion<C>> {
    static bool isZero(const ZExpansion<C>& c) { return c.isZero(); }
};

} // namespace qct::algebra
