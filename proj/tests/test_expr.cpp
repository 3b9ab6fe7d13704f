/*
 * test_expr.cpp
 * -------------
 * Expression parsing into polynomial fractions.
 */
#include <doctest.h>

#include "qct/errors.hpp"
#include "qct/expr.hpp"

using namespace qct::algebra;

namespace {
const std::vector<std::string> Q{"q1", "q2", "q3"};
} // namespace

TEST_SUITE("algebra") {

TEST_CASE("expression parsing basics") {
    ParsedRat a = parse_expression("q1^2*q2 - 3*q3 + 1/2", Q);
    Poly expect = Poly::variable(3, 0) * Poly::variable(3, 0) * Poly::variable(3, 1) -
                  Scalar(3) * Poly::variable(3, 2) +
                  Poly::constant(3, Scalar::rational(1, 2));
    CHECK(a.asPoly() == expect);

    // imaginary unit and unary minus
    ParsedRat b = parse_expression("-i*q1 + i^2", Q);
    CHECK(b.asPoly() == -(Scalar::i() * Poly::variable(3, 0)) - Poly::constant(3, Scalar(1)));
}

TEST_CASE("expression division tracks denominators") {
    ParsedRat f = parse_expression("q3/(1-q3)", Q);
    CHECK_FALSE(f.denIsConstant());
    ParsedRat g = parse_expression("q3 + q3^2 + q3^3/(1-q3)", Q);
    // f == g: q3/(1-q3) = q3 + q3^2 + q3^3/(1-q3)
    CHECK(parsed_equal(f, g));
    CHECK_FALSE(parsed_equal(f, parse_expression("q3", Q)));

    // rational constants: 1/2 is division by the constant poly 2
    CHECK(parse_expression("3/4", Q).asPoly() ==
          Poly::constant(3, Scalar::rational(3, 4)));
    CHECK_THROWS_AS(parse_expression("q3/(1-q3)", Q).asPoly(), qct::StructuralError);
}

TEST_CASE("expression grammar corner cases") {
    CHECK(parse_expression("2*(1+q2)/(1-q2)", Q).num ==
          Scalar(2) * (Poly::constant(3, Scalar(1)) + Poly::variable(3, 1)));
    CHECK(parse_expression("q1^0", Q).asPoly() == Poly::constant(3, Scalar(1)));
    CHECK(parse_expression("(q1+q2)^2", Q).asPoly() ==
          parse_expression("q1^2+2*q1*q2+q2^2", Q).asPoly());
    CHECK(parse_expression("  q1 * ( q2 + q3 ) ", Q).asPoly() ==
          parse_expression("q1*q2+q1*q3", Q).asPoly());

    CHECK_THROWS_AS(parse_expression("q4", Q), qct::StructuralError);
    CHECK_THROWS_AS(parse_expression("q1+", Q), qct::StructuralError);
    CHECK_THROWS_AS(parse_expression("q1)(", Q), qct::StructuralError);
    CHECK_THROWS_AS(parse_expression("1/0", Q), qct::StructuralError);
    CHECK_THROWS_AS(parse_expression("q1 q2", Q), qct::StructuralError);
}

} // TEST_SUITE
