#include "qct/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qct/errors.hpp"

namespace qct::fixtures {

using algebra::MultiIndex;
using ring::PresentedRing;

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

/// "prefix: rest" -> rest when the line starts with the prefix, else nullopt.
std::optional<std::string> tagged(const std::string& line, const std::string& prefix) {
    if (line.rfind(prefix, 0) != 0) return std::nullopt;
    return trim(line.substr(prefix.size()));
}

long long to_int(const std::string& t, const std::string& where) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != t.size())
        throw StructuralError(where + ": expected an integer, got '" + t + "'");
    return v;
}

/// Coefficient of a constant polynomial; rejects anything else.
Scalar constant_value(const Poly& p, const std::string& where) {
    if (!p.isConstant())
        throw StructuralError(where + ": expected a constant");
    if (p.isZero()) return Scalar(0);
    return p.terms().begin()->second;
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& names,
                const std::string& where) {
    algebra::ParsedRat r = algebra::parse_expression(text, names);
    if (!r.denIsConstant())
        throw StructuralError(where + ": expected a polynomial, got a fraction: " + text);
    return r.asPoly();
}

} // namespace

// =============================================================== location

std::string fixture_dir() {
    if (const char* env = std::getenv("QCT_FIXTURE_DIR"); env && *env) return env;
    return QCT_DEFAULT_FIXTURE_DIR;
}

std::string fixture_path(const std::string& relative) {
    return fixture_dir() + "/" + relative;
}

std::vector<std::string> list_fixture_files() {
    namespace fs = std::filesystem;
    fs::path root(fixture_dir());
    if (!fs::is_directory(root))
        throw StructuralError("fixture directory not found: " + root.string());
    std::vector<std::string> out;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        out.push_back(fs::path(entry.path()).lexically_relative(root).generic_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

// ========================================================== presentations

PresentationFile read_presentation(const std::string& path) {
    PresentationFile pres;
    bool sawPoint = false;
    for (const std::string& line : data_lines(read_text_file(path))) {
        if (auto rest = tagged(line, "gens:")) {
            pres.generators = tokens(*rest);
        } else if (auto rest = tagged(line, "degs:")) {
            for (const std::string& t : tokens(*rest))
                pres.degrees.push_back(static_cast<int>(to_int(t, path)));
        } else if (auto rest = tagged(line, "rel:")) {
            pres.relations.push_back(parse_poly(*rest, pres.generators, path));
        } else if (auto rest = tagged(line, "point:")) {
            std::vector<std::string> parts = tokens(*rest);
            if (parts.size() != 2)
                throw StructuralError(path + ": point line needs a class and a value");
            pres.pointClass = parse_poly(parts[0], pres.generators, path);
            pres.pointValue =
                constant_value(parse_poly(parts[1], {}, path), path + ": point value");
            sawPoint = true;
        } else if (auto rest = tagged(line, "schubert:")) {
            std::vector<std::string> parts = tokens(*rest);
            if (parts.size() < 2)
                throw StructuralError(path + ": schubert line needs a name and a partition");
            std::vector<int> partition;
            for (size_t k = 1; k < parts.size(); ++k)
                partition.push_back(static_cast<int>(to_int(parts[k], path)));
            pres.partitions[parts[0]] = partition;
        } else {
            throw StructuralError(path + ": unrecognized line: " + line);
        }
    }
    if (pres.generators.empty()) throw StructuralError(path + ": missing gens line");
    if (pres.degrees.size() != pres.generators.size())
        throw StructuralError(path + ": degs count differs from gens count");
    if (!sawPoint) throw StructuralError(path + ": missing point line");
    return pres;
}

std::vector<Poly> read_basis(const std::string& path, const std::vector<std::string>& names) {
    std::vector<Poly> out;
    for (const std::string& line : data_lines(read_text_file(path))) {
        std::vector<std::string> parts = tokens(line);
        if (parts.size() != 1)
            throw StructuralError(path + ": expected one expression per line, got: " + line);
        out.push_back(parse_poly(parts[0], names, path));
    }
    if (out.empty()) throw StructuralError(path + ": empty basis file");
    return out;
}

PresentedRing load_presented_ring(const std::string& presentationPath,
                                  const std::optional<std::string>& basisPath) {
    PresentationFile pres = read_presentation(presentationPath);
    std::optional<std::vector<Poly>> basis;
    if (basisPath) basis = read_basis(*basisPath, pres.generators);
    return PresentedRing(pres.generators, pres.degrees, pres.relations, basis,
                         {pres.pointClass, pres.pointValue});
}

// ================================================================ matrices

std::vector<Poly> denominator_candidates(int nvars) {
    std::vector<std::pair<int, unsigned>> order; // (popcount, mask)
    for (unsigned mask = 1; mask < (1u << nvars); ++mask)
        order.emplace_back(__builtin_popcount(mask), mask);
    std::sort(order.begin(), order.end());
    std::vector<Poly> out;
    for (const auto& [size, mask] : order) {
        Poly f = Poly::constant(nvars, Scalar(1));
        for (int v = 0; v < nvars; ++v)
            if (mask & (1u << v)) f -= Poly::variable(nvars, v);
        out.push_back(f);
    }
    return out;
}

RationalFunction to_rational(const ParsedRat& parsed, const std::vector<Poly>& candidates) {
    Poly den = parsed.den;
    std::vector<RationalFunction::Factor> factors;
    for (const Poly& f : candidates) {
        int mult = 0;
        while (!den.isConstant()) {
            std::optional<Poly> quotient = den.divideExact(f);
            if (!quotient) break;
            den = *quotient;
            ++mult;
        }
        if (mult > 0) factors.emplace_back(f, mult);
    }
    if (!den.isConstant())
        throw StructuralError("denominator is not a product of the candidate factors: " +
                              parsed.den.str());
    Scalar c = constant_value(den, "denominator");
    return RationalFunction(Scalar(1) / c * parsed.num, factors);
}

namespace {

/// First data line must declare the variables: "vars: q1 q2 ...".
std::vector<std::string> take_vars_header(std::vector<std::string>& lines,
                                          const std::string& path) {
    if (lines.empty()) throw StructuralError(path + ": empty file");
    auto rest = tagged(lines.front(), "vars:");
    if (!rest) throw StructuralError(path + ": first line must declare vars:");
    lines.erase(lines.begin());
    std::vector<std::string> names = tokens(*rest);
    if (names.empty()) throw StructuralError(path + ": empty vars line");
    return names;
}

} // namespace

MatrixFile read_matrix(const std::string& path) {
    std::vector<std::string> lines = data_lines(read_text_file(path));
    MatrixFile out;
    out.qNames = take_vars_header(lines, path);
    int dim = static_cast<int>(lines.size());
    if (dim == 0) throw StructuralError(path + ": no matrix rows");
    std::vector<Poly> candidates = denominator_candidates(static_cast<int>(out.qNames.size()));
    RationalFunction zero((Poly(static_cast<int>(out.qNames.size()))));
    out.mat = Mat<RationalFunction>(dim, dim, zero);
    for (int i = 0; i < dim; ++i) {
        std::vector<std::string> row = tokens(lines[i]);
        if (static_cast<int>(row.size()) != dim)
            throw StructuralError(path + ": row " + std::to_string(i + 1) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(dim));
        for (int j = 0; j < dim; ++j)
            out.mat(i, j) = to_rational(algebra::parse_expression(row[j], out.qNames), candidates);
    }
    return out;
}

namespace {

/// Entries of a column vector over the q variables, from an expression
/// in generators and q variables with a q-only denominator.
std::vector<RationalFunction> expand_override(const std::string& expr,
                                              const PresentedRing& classical, int nq,
                                              const std::vector<std::string>& fullNames,
                                              const std::vector<Poly>& candidates,
                                              const std::string& where) {
    int ngens = static_cast<int>(classical.generators().size());
    algebra::ParsedRat parsed = algebra::parse_expression(expr, fullNames);
    for (int v = 0; v < ngens; ++v)
        if (parsed.den.degreeIn(v) > 0)
            throw StructuralError(where + ": denominator involves a ring generator: " + expr);

    // Denominator as a polynomial in the q variables alone.
    Poly denQ = Poly(nq);
    for (const auto& [mono, coeff] : parsed.den.terms()) {
        std::vector<int> e(mono.exponents().begin() + ngens, mono.exponents().end());
        Poly term = Poly::constant(nq, coeff);
        for (int v = 0; v < nq; ++v)
            if (e[v] > 0) term = term * Poly::variable(nq, v, e[v]);
        denQ += term;
    }
    // Group numerator terms by their generator part.
    std::map<MultiIndex, Poly> byGenPart; // generator monomial -> q coefficient
    for (const auto& [mono, coeff] : parsed.num.terms()) {
        std::vector<int> g(mono.exponents().begin(), mono.exponents().begin() + ngens);
        std::vector<int> e(mono.exponents().begin() + ngens, mono.exponents().end());
        Poly term = Poly::constant(nq, coeff);
        for (int v = 0; v < nq; ++v)
            if (e[v] > 0) term = term * Poly::variable(nq, v, e[v]);
        auto [it, inserted] = byGenPart.try_emplace(MultiIndex(g), Poly(nq));
        it->second += term;
    }

    std::vector<RationalFunction> column(classical.dim(), RationalFunction(Poly(nq)));
    for (const auto& [genMono, qCoeff] : byGenPart) {
        Poly genPoly = Poly::constant(ngens, Scalar(1));
        for (int v = 0; v < ngens; ++v)
            if (genMono[v] > 0) genPoly = genPoly * Poly::variable(ngens, v, genMono[v]);
        algebra::Vec coords = classical.reduce(genPoly);
        RationalFunction part = to_rational(ParsedRat{qCoeff, denQ}, candidates);
        for (int i = 0; i < classical.dim(); ++i)
            if (coords[i] != Scalar(0)) column[i] += coords[i] * part;
    }
    return column;
}

} // namespace

MatrixFile read_product_overrides(const std::string& path, const PresentedRing& classical,
                                  const std::string& generator) {
    std::vector<std::string> lines = data_lines(read_text_file(path));
    MatrixFile out;
    out.qNames = take_vars_header(lines, path);
    int nq = static_cast<int>(out.qNames.size());
    if (lines.empty() || lines.front() != "default: classical")
        throw StructuralError(path + ": expected a 'default: classical' line");
    lines.erase(lines.begin());

    const std::vector<std::string>& gens = classical.generators();
    int ngens = static_cast<int>(gens.size());
    int genIndex = -1;
    for (int v = 0; v < ngens; ++v)
        if (gens[v] == generator) genIndex = v;
    if (genIndex < 0) throw StructuralError(path + ": unknown generator " + generator);

    // Classical default: column j = generator * basis[j] reduced to coordinates.
    int dim = classical.dim();
    RationalFunction zero((Poly(nq)));
    out.mat = Mat<RationalFunction>(dim, dim, zero);
    Poly gen = Poly::variable(ngens, genIndex);
    for (int j = 0; j < dim; ++j) {
        algebra::Vec coords = classical.reduce(gen * classical.basisExprs()[j]);
        for (int i = 0; i < dim; ++i)
            if (coords[i] != Scalar(0))
                out.mat(i, j) = RationalFunction(Poly::constant(nq, coords[i]));
    }

    std::vector<std::string> fullNames = gens;
    fullNames.insert(fullNames.end(), out.qNames.begin(), out.qNames.end());
    std::vector<Poly> candidates = denominator_candidates(nq);
    std::vector<bool> overridden(dim, false);
    for (const std::string& line : lines) {
        auto rest = tagged(line, "star ");
        if (!rest) throw StructuralError(path + ": unrecognized line: " + line);
        size_t eq = rest->find('=');
        if (eq == std::string::npos)
            throw StructuralError(path + ": override line needs '=': " + line);
        std::string lhs = trim(rest->substr(0, eq));
        std::string rhs = trim(rest->substr(eq + 1));

        // The left side names one basis element of the classical ring.
        algebra::Vec lhsCoords = classical.reduce(parse_poly(lhs, gens, path));
        int column = -1;
        for (int i = 0; i < dim; ++i) {
            if (lhsCoords[i] == Scalar(0)) continue;
            if (column >= 0 || lhsCoords[i] != Scalar(1)) {
                column = -2;
                break;
            }
            column = i;
        }
        if (column < 0)
            throw StructuralError(path + ": left side is not a basis element: " + lhs);
        if (overridden[column])
            throw StructuralError(path + ": duplicate override for " + lhs);
        overridden[column] = true;
        out.mat.setColumn(column,
                          expand_override(rhs, classical, nq, fullNames, candidates, path));
    }
    return out;
}

// ============================================================ divisor data

toric::DivisorClassData read_classes(const std::string& path) {
    toric::DivisorClassData data;
    for (const std::string& line : data_lines(read_text_file(path))) {
        if (auto rest = tagged(line, "nef:")) {
            data.nefNames = tokens(*rest);
        } else if (auto rest = tagged(line, "curves:")) {
            data.curveNames = tokens(*rest);
        } else if (auto rest = tagged(line, "ray:")) {
            std::vector<long long> row;
            for (const std::string& t : tokens(*rest)) row.push_back(to_int(t, path));
            data.rayClasses.push_back(row);
        } else if (auto rest = tagged(line, "c1:")) {
            for (const std::string& t : tokens(*rest)) data.c1.push_back(to_int(t, path));
        } else {
            throw StructuralError(path + ": unrecognized line: " + line);
        }
    }
    if (data.nefNames.empty() || data.rayClasses.empty())
        throw StructuralError(path + ": missing nef or ray lines");
    return data;
}

// ========================================================= maps and tables

MapFile read_map(const std::string& path) {
    MapFile out;
    for (const std::string& line : data_lines(read_text_file(path))) {
        std::vector<std::string> parts = tokens(line);
        if (parts.size() != 2)
            throw StructuralError(path + ": expected 'source image' per line, got: " + line);
        out.entries.emplace_back(parts[0], parts[1]);
    }
    if (out.entries.empty()) throw StructuralError(path + ": empty map file");
    return out;
}

std::vector<long long> read_betti(const std::string& path) {
    std::vector<std::string> lines = data_lines(read_text_file(path));
    if (lines.size() != 1)
        throw StructuralError(path + ": expected a single line of dimensions");
    std::vector<long long> out;
    for (const std::string& t : tokens(lines[0])) {
        long long v = to_int(t, path);
        if (v < 0) throw StructuralError(path + ": negative dimension");
        out.push_back(v);
    }
    return out;
}

SchubertBasisFile read_schubert_basis(const std::string& path) {
    SchubertBasisFile out;
    for (const std::string& line : data_lines(read_text_file(path))) {
        std::vector<std::string> parts = tokens(line);
        if (parts.size() != 3)
            throw StructuralError(path + ": expected 'name a1 a2' per line, got: " + line);
        int a1 = static_cast<int>(to_int(parts[1], path));
        int a2 = static_cast<int>(to_int(parts[2], path));
        if (a1 < a2 || a2 < 0)
            throw StructuralError(path + ": not a partition: " + line);
        out.names.push_back(parts[0]);
        out.partitions.emplace_back(a1, a2);
    }
    if (out.names.empty()) throw StructuralError(path + ": empty basis file");
    return out;
}

OperatorFile read_operators(const std::string& path) {
    std::vector<std::string> lines = data_lines(read_text_file(path));
    OperatorFile out;
    out.varNames = take_vars_header(lines, path);
    for (const std::string& line : lines) {
        std::vector<std::string> parts = tokens(line);
        if (parts.size() != 2)
            throw StructuralError(path + ": expected 'label expression' per line, got: " + line);
        out.labels.push_back(parts[0]);
        out.exprs.push_back(parse_poly(parts[1], out.varNames, path));
    }
    if (out.labels.empty()) throw StructuralError(path + ": no operator lines");
    return out;
}

} // namespace qct::fixtures
