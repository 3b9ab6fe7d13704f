/*
 * series.cpp
 * ----------
 * Truncated-series helpers over scalar coefficients.
 */
#include "qct/series.hpp"

namespace qct::algebra {

ScalarSeries series_from_poly(const Poly& p, const std::vector<int>& bounds) {
    ScalarSeries s(p.nvars(), bounds);
    for (const auto& [m, c] : p.terms()) s.addTerm(m, c);
    return s;
}

ScalarSeries series_mul(const ScalarSeries& a, const ScalarSeries& b) {
    if (a.nvars() != b.nvars() || a.bounds() != b.bounds())
        throw StructuralError("series_mul: incompatible truncation boxes");
    ScalarSeries r(a.nvars(), a.bounds());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.addTerm(ma + mb, ca * cb);
    return r;
}

ScalarSeries series_inverse(const Poly& f, const std::vector<int>& bounds) {
    Scalar c0 = f.constantTerm();
    if (c0.isZero())
        throw StructuralError("series_inverse: constant term vanishes, no series inverse");
    Scalar c0inv = c0.inverse();

    // Enumerate the box bottom-up (std::map order is lex, under which every
    // proper divisor of m precedes m, so the recursion below is well-founded).
    ScalarSeries g(f.nvars(), bounds);
    std::map<MultiIndex, Scalar> coeffs;
    std::vector<int> cur(bounds.size(), 0);
    // Walk the full box via odometer increments.
    bool done = false;
    while (!done) {
        MultiIndex m(cur);
        Scalar acc = m.isZero() ? Scalar(1) : Scalar(0);
        for (const auto& [k, fk] : f.terms()) {
            if (k.isZero()) continue;
            if (!m.divisibleBy(k)) continue;
            auto it = coeffs.find(m - k);
            if (it != coeffs.end()) acc -= fk * it->second;
        }
        Scalar gm = acc * c0inv;
        if (!gm.isZero()) coeffs.emplace(m, gm);

        // odometer step
        done = true;
        for (size_t v = bounds.size(); v-- > 0;) {
            if (cur[v] < bounds[v]) {
                ++cur[v];
                for (size_t w = v + 1; w < bounds.size(); ++w) cur[w] = 0;
                done = false;
                break;
            }
        }
        if (bounds.empty()) break;
    }
    for (auto& [m, c] : coeffs) g.addTerm(m, c);
    return g;
}

} // namespace qct::algebra
