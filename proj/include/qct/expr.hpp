/*
 * expr.hpp
 * --------
 * A small recursive-descent parser for exact arithmetic expressions:
 * integers, rationals, the imaginary unit i, named variables, + - * / ^
 * and parentheses.  Results are fractions of polynomials over a fixed
 * variable-name table; fixture comparisons then work by
 * cross-multiplication, so the parser never needs to simplify.
 */
#pragma once

#include <string>
#include <vector>

#include "qct/polynomial.hpp"

namespace qct::algebra {

/// A parsed expression num/den, with den a (nonzero) polynomial.
/// Only division introduces a nontrivial denominator.
struct ParsedRat {
    Poly num;
    Poly den;

    [[nodiscard]] bool denIsConstant() const { return den.isConstant(); }
    /// num/den as a plain polynomial; throws StructuralError when the
    /// denominator is not constant.
    [[nodiscard]] Poly asPoly() const;
};

/// Parse over the given variable names ("i" is reserved for the
/// imaginary unit and must not appear in the table).
[[nodiscard]] ParsedRat parse_expression(const std::string& text,
                                         const std::vector<std::string>& names);

/// Equality test of two parsed fractions via cross-multiplication.
[[nodiscard]] bool parsed_equal(const ParsedRat& a, const ParsedRat& b);

} // namespace qct::algebra
