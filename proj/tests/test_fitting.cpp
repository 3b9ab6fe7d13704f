/*
 * test_fitting.cpp
 * ----------------
 * Rational reconstruction from truncated series: exact recovery,
 * minimal denominators, and refusal on underdetermined input.
 */
#include <doctest.h>

#include "qct/errors.hpp"
#include "qct/fitting.hpp"

using namespace qct::algebra;

namespace {

const int N = 3;
Poly qv(int v) { return Poly::variable(N, v); }
Poly one() { return Poly::constant(N, Scalar(1)); }

std::vector<Poly> paperAnsatz() {
    return {one() - qv(1), one() - qv(2), one() - qv(1) - qv(2)};
}

} // namespace

TEST_SUITE("algebra") {

TEST_CASE("fit recovers polynomials with the empty denominator") {
    Poly p = Scalar(3) * (qv(0) * qv(1)) - qv(2) + one();
    ScalarSeries s = series_from_poly(p, {3, 8, 8});
    RationalFunction f = rational_from_series(s, paperAnsatz());
    CHECK(f == RationalFunction(p));
    CHECK(f.isPolynomial());
}

TEST_CASE("fit recovers simple poles and picks the minimal denominator") {
    // target: q3/(1-q3)
    RationalFunction target(qv(2), {{one() - qv(2), 1}});
    ScalarSeries s = target.expand({3, 8, 8});
    RationalFunction f = rational_from_series(s, paperAnsatz());
    CHECK(f == target);
    CHECK(f.factorMultiplicity(one() - qv(2)) == 1);
    CHECK(f.factorMultiplicity(one() - qv(1)) == 0);
    CHECK(f.factorMultiplicity(one() - qv(1) - qv(2)) == 0);
}

TEST_CASE("fit recovers a two-factor denominator") {
    // target: (q2 + q1*q3) / ((1-q2)(1-q2-q3))
    RationalFunction target(qv(1) + qv(0) * qv(2),
                            {{one() - qv(1), 1}, {one() - qv(1) - qv(2), 1}});
    ScalarSeries s = target.expand({3, 8, 8});
    RationalFunction f = rational_from_series(s, paperAnsatz());
    CHECK(f == target);
}

TEST_CASE("fit rejects series with no closed form over the ansatz") {
    // 1/(1-q1) is rational, but (1-q1) is not in the ansatz.
    RationalFunction target(one(), {{one() - qv(0), 1}});
    ScalarSeries s = target.expand({6, 2, 2});
    CHECK_THROWS_AS(rational_from_series(s, paperAnsatz()), qct::NoClosedForm);
}

TEST_CASE("fit refuses underdetermined input instead of guessing") {
    RationalFunction target(qv(1), {{one() - qv(1), 1}});
    // Only 3 orders in q2: even the true answer (numerator q2, factor
    // 1-q2) would need 1+1+2 = 4 orders of margin.
    ScalarSeries s = target.expand({3, 3, 3});
    CHECK_THROWS_AS(rational_from_series(s, paperAnsatz()), qct::InsufficientOrders);
    // The same series with enough orders fits fine.
    CHECK(rational_from_series(target.expand({3, 4, 4}), paperAnsatz()) == target);
}

TEST_CASE("fit handles the zero series") {
    ScalarSeries s(N, {3, 8, 8});
    RationalFunction f = rational_from_series(s, paperAnsatz());
    CHECK(f.isZero());
}

TEST_CASE("fit matches scalar coefficients exactly") {
    // target with i in the numerator: i*q2/(1-q2)
    RationalFunction target(Scalar::i() * qv(1), {{one() - qv(1), 1}});
    ScalarSeries s = target.expand({3, 8, 8});
    CHECK(rational_from_series(s, paperAnsatz()) == target);
}

} // TEST_SUITE
