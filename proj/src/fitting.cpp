/*
 * fitting.cpp
 * -----------
 * Denominator-subset search for rational reconstruction from series.
 */
#include "qct/fitting.hpp"

#include <algorithm>
#include <numeric>

#include "qct/errors.hpp"

namespace qct::algebra {

RationalFunction rational_from_series(const ScalarSeries& s, const std::vector<Poly>& ansatz,
                                      const FitOptions& opts) {
    const int nvars = s.nvars();
    const auto& bounds = s.bounds();
    for (const auto& f : ansatz) {
        if (f.nvars() != nvars)
            throw StructuralError("rational_from_series: ansatz variable-count mismatch");
        if (f.isZero() || f.isConstant())
            throw StructuralError("rational_from_series: trivial ansatz factor");
    }
    if (ansatz.size() > 20)
        throw StructuralError("rational_from_series: ansatz too large for subset search");

    // Order subsets by total denominator degree (then bitmask) so the
    // first hit is the minimal denominator.
    const size_t n = ansatz.size();
    std::vector<unsigned> subsets(1u << n);
    std::iota(subsets.begin(), subsets.end(), 0u);
    auto totalDeg = [&](unsigned mask) {
        int d = 0;
        for (size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) d += ansatz[k].degree();
        return d;
    };
    std::stable_sort(subsets.begin(), subsets.end(),
                     [&](unsigned a, unsigned b) { return totalDeg(a) < totalDeg(b); });

    bool marginFailure = false;
    for (unsigned mask : subsets) {
        Poly prod = Poly::constant(nvars, Scalar(1));
        for (size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) prod = prod * ansatz[k];

        // T = s * prod must be a polynomial of total degree <= cap.
        ScalarSeries t = series_mul(s, series_from_poly(prod, bounds));
        Poly candidate(nvars);
        bool matches = true;
        for (const auto& [m, c] : t.terms()) {
            if (m.degree() <= opts.degreeCap)
                candidate.addTerm(m, c);
            else {
                matches = false;
                break;
            }
        }
        if (!matches) continue;

        // Require `margin` verified orders beyond the candidate in every
        // variable; otherwise the match could be a truncation artifact.
        bool enough = true;
        for (int v = 0; v < nvars; ++v)
            if (bounds[v] < candidate.degreeIn(v) + prod.degreeIn(v) + opts.margin) {
                enough = false;
                break;
            }
        if (!enough) {
            marginFailure = true;
            continue;
        }

        std::vector<RationalFunction::Factor> den;
        for (size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) den.emplace_back(ansatz[k], 1);
        return RationalFunction(std::move(candidate), std::move(den));
    }

    if (marginFailure)
        throw InsufficientOrders(
            "rational_from_series: a candidate matched but the series has too few "
            "orders to certify it");
    throw NoClosedForm(
        "rational_from_series: no rational function over the ansatz matches the series");
}

} // namespace qct::algebra
