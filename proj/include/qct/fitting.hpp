/*
 * fitting.hpp
 * -----------
 * Reconstruction of a rational closed form from a truncated power
 * series, given a declared ansatz of possible denominator factors.
 * Subsets of the ansatz are tried in order of increasing total degree,
 * so the first success has the minimal (hence reduced) denominator.
 *
 * Soundness policy: a candidate is accepted only when the series box
 * extends at least `margin` orders beyond the candidate's degrees in
 * every variable; with fewer known orders the fit refuses to answer
 * (InsufficientOrders) rather than guess.
 */
#pragma once

#include <vector>

#include "qct/rational_function.hpp"
#include "qct/series.hpp"

namespace qct::algebra {

struct FitOptions {
    int degreeCap = 4; // max total degree of the numerator
    int margin = 2;    // extra verified orders required per variable
};

/// Find the unique rational function with denominator dividing the
/// product of the ansatz factors and numerator of total degree at most
/// the cap whose expansion matches the series on its whole box.
/// Throws NoClosedForm / InsufficientOrders.
[[nodiscard]] RationalFunction rational_from_series(const ScalarSeries& s,
                                                    const std::vector<Poly>& ansatz,
                                                    const FitOptions& opts = {});

} // namespace qct::algebra
