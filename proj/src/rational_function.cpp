/*
 * rational_function.cpp
 * ---------------------
 * Factored-denominator rational arithmetic and simple-pole residues.
 */
#include "qct/rational_function.hpp"

#include <algorithm>
#include <map>

#include "qct/errors.hpp"

namespace qct::algebra {

namespace {

// Scale a factor so its lowest lex monomial has coefficient one; returns
// the constant pulled out (so factor_old = c * factor_new).
Scalar normalizeFactor(Poly& f) {
    Scalar c = f.terms().begin()->second;
    f = c.inverse() * f;
    return c;
}

} // namespace

RationalFunction::RationalFunction(Poly num, std::vector<Factor> den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalFunction::normalize() {
    // Fold constants out of factors, drop constant factors, merge repeats.
    std::map<Poly, int> merged;
    Scalar scale(1);
    for (auto& [f, mult] : den_) {
        if (mult <= 0) throw StructuralError("RationalFunction: nonpositive multiplicity");
        if (f.nvars() != num_.nvars())
            throw StructuralError("RationalFunction: factor variable-count mismatch");
        if (f.isZero()) throw StructuralError("RationalFunction: zero denominator factor");
        Poly g = f;
        Scalar c = normalizeFactor(g);
        for (int k = 0; k < mult; ++k) scale *= c;
        if (g.isConstant()) continue; // g == 1 after normalization
        merged[g] += mult;
    }
    num_ = scale.inverse() * num_;

    if (num_.isZero()) {
        den_.clear();
        return;
    }

    // Reduce: cancel factors that divide the numerator exactly.
    den_.clear();
    for (auto& [f, mult] : merged) {
        int m = mult;
        while (m > 0) {
            auto q = num_.divideExact(f);
            if (!q) break;
            num_ = *q;
            --m;
        }
        if (m > 0) den_.emplace_back(f, m);
    }
    // Canonical factor order: simplest factors first.
    std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) {
        int da = a.first.degree(), db = b.first.degree();
        if (da != db) return da < db;
        size_t ta = a.first.terms().size(), tb = b.first.terms().size();
        if (ta != tb) return ta < tb;
        return a.first < b.first;
    });
}

int RationalFunction::factorMultiplicity(const Poly& factor) const {
    for (const auto& [f, m] : den_)
        if (f == factor) return m;
    return 0;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (nvars() != o.nvars())
        throw StructuralError("RationalFunction: variable-count mismatch in +");
    // Least common denominator over the union of factors.
    std::map<Poly, std::pair<int, int>> mults; // factor -> (mult here, mult there)
    for (const auto& [f, m] : den_) mults[f].first = m;
    for (const auto& [f, m] : o.den_) mults[f].second = m;

    Poly a = num_, b = o.num_;
    std::vector<Factor> lcd;
    for (const auto& [f, mm] : mults) {
        int m = std::max(mm.first, mm.second);
        lcd.emplace_back(f, m);
        for (int k = mm.first; k < m; ++k) a = a * f;
        for (int k = mm.second; k < m; ++k) b = b * f;
    }
    num_ = a + b;
    den_ = std::move(lcd);
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (nvars() != o.nvars())
        throw StructuralError("RationalFunction: variable-count mismatch in *");
    num_ = num_ * o.num_;
    for (const auto& [f, m] : o.den_) den_.emplace_back(f, m);
    normalize();
    return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.nvars() != b.nvars()) return false;
    // Cross-multiply; no simplification needed for a yes/no answer.
    Poly lhs = a.num_, rhs = b.num_;
    for (const auto& [f, m] : b.den_)
        for (int k = 0; k < m; ++k) lhs = lhs * f;
    for (const auto& [f, m] : a.den_)
        for (int k = 0; k < m; ++k) rhs = rhs * f;
    return lhs == rhs;
}

RationalFunction RationalFunction::substituteOne(int v) const {
    Poly num = num_.substituteOne(v);
    std::vector<Factor> den;
    for (const auto& [f, m] : den_) {
        Poly g = f.substituteOne(v);
        if (g.isZero())
            throw EvaluationPole("substituteOne: denominator factor (" + f.str() +
                                 ") vanishes identically at variable " + std::to_string(v + 1) +
                                 " = 1");
        den.emplace_back(g, m);
    }
    return RationalFunction(std::move(num), std::move(den));
}

Scalar RationalFunction::constantTermValue() const {
    Scalar v = num_.constantTerm();
    for (const auto& [f, m] : den_) {
        Scalar c = f.constantTerm();
        if (c.isZero())
            throw EvaluationPole("constantTermValue: factor (" + f.str() +
                                 ") vanishes at the origin");
        for (int k = 0; k < m; ++k) v /= c;
    }
    return v;
}

ScalarSeries RationalFunction::expand(const std::vector<int>& bounds) const {
    ScalarSeries s = series_from_poly(num_, bounds);
    for (const auto& [f, m] : den_) {
        ScalarSeries inv = series_inverse(f, bounds);
        for (int k = 0; k < m; ++k) s = series_mul(s, inv);
    }
    return s;
}

bool RationalFunction::isHomogeneous(const std::vector<int>& weights, int* degreeOut) const {
    int dnum = 0;
    if (!num_.isHomogeneous(weights, &dnum)) return false;
    int d = dnum;
    for (const auto& [f, m] : den_) {
        int df = 0;
        if (!f.isHomogeneous(weights, &df)) return false;
        d -= m * df;
    }
    if (degreeOut) *degreeOut = isZero() ? 0 : d;
    return true;
}

RationalFunction RationalFunction::renameVars(const std::vector<int>& varMap, int newNvars) const {
    std::vector<Factor> den;
    for (const auto& [f, m] : den_) den.emplace_back(f.renameVars(varMap, newNvars), m);
    return RationalFunction(num_.renameVars(varMap, newNvars), std::move(den));
}

std::string RationalFunction::str(const std::vector<std::string>& names) const {
    std::string ns = num_.str(names);
    if (den_.empty()) return ns;
    if (num_.terms().size() > 1) ns = "(" + ns + ")";
    std::string ds;
    for (const auto& [f, m] : den_) {
        if (!ds.empty()) ds += "*";
        ds += "(" + f.str(names) + ")^" + std::to_string(m);
    }
    return ns + " / " + ds;
}

RationalFunction residue_at_one(const RationalFunction& f, int var,
                                ResidueConvention convention) {
    if (var < 0 || var >= f.nvars())
        throw StructuralError("residue_at_one: variable index out of range");
    // The normalized pole factor is exactly 1 - q_var.
    Poly pole = Poly::constant(f.nvars(), Scalar(1)) - Poly::variable(f.nvars(), var);
    int mult = f.factorMultiplicity(pole);
    if (mult == 0) return RationalFunction(Poly(f.nvars()));
    if (mult >= 2)
        throw HigherOrderPole("residue_at_one: pole of order " + std::to_string(mult) +
                              " at variable " + std::to_string(var + 1) + " = 1");

    // Simple pole: residue = +/- numerator/rest evaluated on {q_var = 1}.
    Poly num = f.numerator().substituteOne(var);
    std::vector<RationalFunction::Factor> den;
    for (const auto& [g, m] : f.denominator()) {
        if (g == pole) continue;
        Poly h = g.substituteOne(var);
        if (h.isZero())
            throw NonIsolatedPole("residue_at_one: factor (" + g.str() +
                                  ") also vanishes identically at variable " +
                                  std::to_string(var + 1) + " = 1");
        den.emplace_back(h, m);
    }
    // Plain: lim (1-q) f.  DLog: lim (q-1)/q f = -Plain (the 1/q factor
    // evaluates to 1 on q = 1).
    RationalFunction r(std::move(num), std::move(den));
    return convention == ResidueConvention::Plain ? r : -r;
}

} // namespace qct::algebra
