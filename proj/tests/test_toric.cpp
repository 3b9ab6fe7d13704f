/*
 * test_toric.cpp
 * --------------
 * Divisor class data, Stanley-Reisner presentations, intersection
 * degrees, and cohomology rings built from fans.
 */
#include <doctest.h>

#include "qct/errors.hpp"
#include "qct/toric.hpp"

using namespace qct;
using namespace qct::toric;
using algebra::MultiIndex;
using algebra::Poly;
using algebra::Scalar;
using algebra::vecIsZero;

namespace {

Poly var(int nvars, int v) { return Poly::variable(nvars, v); }

/// P1 x P1 with its product fan; nef basis = the two hyperplane classes.
struct P1P1 {
    Fan fan = product_fan(projective_space_fan(1), projective_space_fan(1));
    DivisorClassData data{{"m1", "m2"}, {"b1", "b2"}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}, {2, 2}};
};

DivisorClassData p2Data() { return {{"h"}, {"b"}, {{1}, {1}, {1}}, {3}}; }

} // namespace

TEST_SUITE("toric") {

TEST_CASE("projective line presentation: two equal ray classes with product zero") {
    const auto pres = stanley_reisner_presentation(projective_space_fan(1));
    REQUIRE(pres.linearRelations.size() == 1);
    CHECK(pres.linearRelations[0] == var(2, 0) - var(2, 1));
    REQUIRE(pres.srRelations.size() == 1);
    CHECK(pres.srRelations[0] == var(2, 0) * var(2, 1));
}

TEST_CASE("projective plane presentation and its ring in the nef basis") {
    const Fan fan = projective_space_fan(2);
    const auto pres = stanley_reisner_presentation(fan);
    REQUIRE(pres.linearRelations.size() == 2);
    CHECK(pres.linearRelations[0] == var(3, 0) - var(3, 2));
    CHECK(pres.linearRelations[1] == var(3, 1) - var(3, 2));
    REQUIRE(pres.minimalNonFaces.size() == 1);
    CHECK(pres.minimalNonFaces[0] == std::vector<int>{0, 1, 2});

    const auto rels = relations_in_nef_basis(fan, p2Data(), pres);
    REQUIRE(rels.size() == 1);
    CHECK(rels[0] == var(1, 0) * var(1, 0) * var(1, 0));

    const auto ring = cohomology_ring_from_fan(fan, p2Data());
    CHECK(ring.dim() == fan.numMaxCones());
    CHECK(ring.integral(var(1, 0) * var(1, 0)) == Scalar(1));
    CHECK(quantum_degrees(fan, p2Data()) == std::vector<int>{6});
}

TEST_CASE("product of projective lines: non-faces, degrees, ideal equality") {
    const P1P1 x;
    const auto pres = stanley_reisner_presentation(x.fan);
    REQUIRE(pres.minimalNonFaces.size() == 2);
    CHECK(pres.minimalNonFaces[0] == std::vector<int>{0, 1});
    CHECK(pres.minimalNonFaces[1] == std::vector<int>{2, 3});

    CHECK(quantum_degrees(x.fan, x.data) == std::vector<int>{4, 4});
    CHECK(intersection_degrees(x.fan, x.data, MultiIndex{1, 0}) ==
          std::vector<long long>{1, 1, 0, 0});
    CHECK(intersection_degrees(x.fan, x.data, MultiIndex{0, 0}) ==
          std::vector<long long>{0, 0, 0, 0});
    CHECK(intersection_degrees(x.fan, x.data, MultiIndex{2, 3}) ==
          std::vector<long long>{2, 2, 3, 3});

    // The computed ideal equals (m1^2, m2^2): reduce generators of each
    // presentation inside the other's ring.
    const auto computed = cohomology_ring_from_fan(x.fan, x.data);
    CHECK(computed.dim() == 4);
    const std::vector<Poly> hand = {var(2, 0) * var(2, 0), var(2, 1) * var(2, 1)};
    const auto handRing = ring::ring_from_presentation(
        {"m1", "m2"}, {2, 2}, hand, std::nullopt, {var(2, 0) * var(2, 1), Scalar(1)});
    for (const Poly& p : hand) CHECK(vecIsZero(computed.reduce(p)));
    for (const Poly& p : relations_in_nef_basis(x.fan, x.data, pres))
        CHECK(vecIsZero(handRing.reduce(p)));
}

TEST_CASE("ring dimension equals the number of maximal cones") {
    // P1 x P2 with nef basis (hyperplane, hyperplane).
    const Fan fan = product_fan(projective_space_fan(1), projective_space_fan(2));
    const DivisorClassData data{
        {"m1", "m2"}, {"b1", "b2"}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}}, {2, 3}};
    const auto ring = cohomology_ring_from_fan(fan, data);
    CHECK(ring.dim() == 6);
    CHECK(fan.numMaxCones() == 6);

    const auto p3 = cohomology_ring_from_fan(projective_space_fan(3),
                                             {{"h"}, {"b"}, {{1}, {1}, {1}, {1}}, {4}});
    CHECK(p3.dim() == 4);
}

TEST_CASE("explicit basis is honored") {
    const P1P1 x;
    const std::vector<Poly> basis = {Poly::constant(2, Scalar(1)), var(2, 0), var(2, 1),
                                     var(2, 0) * var(2, 1)};
    const auto ring = cohomology_ring_from_fan(x.fan, x.data, basis);
    CHECK(ring.dim() == 4);
    CHECK(ring.integral(var(2, 0) * var(2, 1)) == Scalar(1));
    CHECK(ring.integral(var(2, 0) * var(2, 0)) == Scalar(0));
}

TEST_CASE("non-smooth and incomplete fans are rejected for presentations") {
    Fan square;
    square.dim = 2;
    square.rays = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    square.maxCones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    CHECK_THROWS_AS((void)stanley_reisner_presentation(square), UnsupportedFan);

    Fan missing = projective_space_fan(2);
    missing.maxCones.pop_back();
    CHECK_THROWS_AS((void)stanley_reisner_presentation(missing), UnsupportedFan);
}

TEST_CASE("divisor data consistency violations are caught") {
    const Fan p2 = projective_space_fan(2);

    DivisorClassData wrongC1 = p2Data();
    wrongC1.c1 = {4};
    CHECK_THROWS_AS(check_divisor_data(p2, wrongC1), StructuralError);

    DivisorClassData badRelation = p2Data();
    badRelation.rayClasses = {{1}, {2}, {1}};
    CHECK_THROWS_AS(check_divisor_data(p2, badRelation), StructuralError);

    // Classes that fail to span the declared two-dimensional nef basis.
    const Fan p1 = projective_space_fan(1);
    const DivisorClassData rankDeficient{{"m1", "m2"}, {"b1", "b2"}, {{1, 0}, {1, 0}}, {2, 0}};
    CHECK_THROWS_AS(check_divisor_data(p1, rankDeficient), StructuralError);

    // beta must have one exponent per curve class.
    CHECK_THROWS_AS((void)intersection_degrees(p2, p2Data(), MultiIndex{1, 1}), StructuralError);
}

} // TEST_SUITE
