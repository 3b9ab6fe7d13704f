/*
 * fixtures.hpp
 * ------------
 * Loaders for the shipped data files: ring presentations, basis lists,
 * multiplication matrices (full rows, or sparse override columns over a
 * classical cup product), divisor class tables, comparison maps, Betti
 * tables, Schubert bases and extraction operators.
 *
 * All files are plain text: '#' starts a comment, blank lines are
 * ignored, and every expression is parsed exactly over a declared name
 * table (see expr.hpp).  Entries with denominators are refactored over
 * an explicit candidate list so poles stay visible factor by factor.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qct/expr.hpp"
#include "qct/graded_ring.hpp"
#include "qct/toric.hpp"

namespace qct::fixtures {

using algebra::Mat;
using algebra::ParsedRat;
using algebra::Poly;
using algebra::RationalFunction;
using algebra::Scalar;

// ============================================================ location ====

/// Root of the fixture tree: the QCT_FIXTURE_DIR environment variable
/// when set, else the directory recorded at build time.
[[nodiscard]] std::string fixture_dir();

/// fixture_dir() + "/" + relative.
[[nodiscard]] std::string fixture_path(const std::string& relative);

/// Relative paths of every data file under the fixture root, sorted.
[[nodiscard]] std::vector<std::string> list_fixture_files();

/// Whole file as a string; throws StructuralError when unreadable.
[[nodiscard]] std::string read_text_file(const std::string& path);

/// Non-comment, non-blank lines, whitespace-trimmed.
[[nodiscard]] std::vector<std::string> data_lines(const std::string& text);

// ======================================================= presentations ====

/// A generators-and-relations description of a graded ring, plus the
/// integral normalization and optional partition labels (two-row
/// Schubert data) for generators.
struct PresentationFile {
    std::vector<std::string> generators;
    std::vector<int> degrees;
    std::vector<Poly> relations;  ///< over the generators
    Poly pointClass;              ///< integral(pointClass) = pointValue
    Scalar pointValue{0};
    std::map<std::string, std::vector<int>> partitions;
};

[[nodiscard]] PresentationFile read_presentation(const std::string& path);

/// One expression per line over the given names.
[[nodiscard]] std::vector<Poly> read_basis(const std::string& path,
                                           const std::vector<std::string>& names);

/// Presented ring of a presentation file, with an optional explicit
/// basis file (parsed over the presentation's generators).
[[nodiscard]] ring::PresentedRing load_presented_ring(
    const std::string& presentationPath,
    const std::optional<std::string>& basisPath = std::nullopt);

// ============================================================ matrices ====

/// Candidate denominator factors 1 - sum_{v in S} x_v over nonempty
/// subsets S of the variables, smaller subsets first.  Every shipped
/// denominator is a product of such factors.
[[nodiscard]] std::vector<Poly> denominator_candidates(int nvars);

/// Refactor a parsed fraction over the candidate list; throws
/// StructuralError when the denominator is not a constant multiple of a
/// product of candidates.
[[nodiscard]] RationalFunction to_rational(const ParsedRat& parsed,
                                           const std::vector<Poly>& candidates);

/// A multiplication operator over declared deformation variables.
struct MatrixFile {
    std::vector<std::string> qNames;
    Mat<RationalFunction> mat;  ///< column j = image of basis element j
};

/// Full matrix file: a "vars:" header, then one row of expressions per
/// line (square, entries over the declared variables).
[[nodiscard]] MatrixFile read_matrix(const std::string& path);

/// Sparse override file for multiplication by one ring generator:
/// "vars:" + "default: classical" + "star b = expr" lines.  Unlisted
/// columns are the classical cup products generator * b_j reduced in
/// the given ring; each override expression (over generators and
/// deformation variables, denominators in the deformation variables
/// only) is expanded to basis coordinates.
[[nodiscard]] MatrixFile read_product_overrides(const std::string& path,
                                                const ring::PresentedRing& classical,
                                                const std::string& generator);

// ======================================================== divisor data ====

/// "nef:" / "curves:" / "ray:" (one per ray) / "c1:" lines.
[[nodiscard]] toric::DivisorClassData read_classes(const std::string& path);

// ===================================================== maps and tables ====

/// Two expressions per line: source and image, parsing left to the
/// caller (the two sides live over different name tables).
struct MapFile {
    std::vector<std::pair<std::string, std::string>> entries;
};

[[nodiscard]] MapFile read_map(const std::string& path);

/// One line of integers: dimension per cohomological degree 0..top.
[[nodiscard]] std::vector<long long> read_betti(const std::string& path);

/// "name a1 a2" lines: the Schubert basis of a Grassmannian of planes,
/// in fixture order.
struct SchubertBasisFile {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> partitions;
};

[[nodiscard]] SchubertBasisFile read_schubert_basis(const std::string& path);

/// "label expression" lines over a declared variable table; expressions
/// must have constant denominators.
struct OperatorFile {
    std::vector<std::string> varNames;
    std::vector<std::string> labels;
    std::vector<Poly> exprs;
};

[[nodiscard]] OperatorFile read_operators(const std::string& path);

} // namespace qct::fixtures
