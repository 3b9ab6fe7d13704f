/*
 * polynomial.cpp
 * --------------
 * Sparse exact polynomial arithmetic, including the single-divisor exact
 * division used to reduce rational functions.
 */
#include "qct/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qct/errors.hpp"

namespace qct::algebra {

// ===================================================================
// MultiIndex
// ===================================================================

int MultiIndex::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int MultiIndex::degree(const std::vector<int>& weights) const {
    if (weights.size() != e_.size())
        throw StructuralError("MultiIndex::degree: weight vector has wrong length");
    int d = 0;
    for (size_t v = 0; v < e_.size(); ++v) d += e_[v] * weights[v];
    return d;
}

bool MultiIndex::isZero() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (o.size() != size()) throw StructuralError("MultiIndex: size mismatch in +");
    MultiIndex r = *this;
    for (int v = 0; v < size(); ++v) r.e_[v] += o.e_[v];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    if (o.size() != size()) throw StructuralError("MultiIndex: size mismatch in -");
    MultiIndex r = *this;
    for (int v = 0; v < size(); ++v) r.e_[v] -= o.e_[v];
    return r;
}

bool MultiIndex::divisibleBy(const MultiIndex& o) const {
    if (o.size() != size()) throw StructuralError("MultiIndex: size mismatch in divisibleBy");
    for (int v = 0; v < size(); ++v)
        if (e_[v] < o.e_[v]) return false;
    return true;
}

bool MultiIndex::withinBounds(const std::vector<int>& bounds) const {
    if (bounds.size() != e_.size())
        throw StructuralError("MultiIndex::withinBounds: bounds have wrong length");
    for (size_t v = 0; v < e_.size(); ++v)
        if (e_[v] > bounds[v]) return false;
    return true;
}

std::string MultiIndex::str(const std::vector<std::string>& names) const {
    std::string s;
    for (int v = 0; v < size(); ++v) {
        if (e_[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += names.empty() ? "x" + std::to_string(v + 1) : names[v];
        if (e_[v] != 1) s += "^" + std::to_string(e_[v]);
    }
    return s.empty() ? "1" : s;
}

MultiIndex MultiIndex::parse(const std::string& text, const std::vector<std::string>& names) {
    MultiIndex m(static_cast<int>(names.size()));
    if (text == "1") return m;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '*')) {
        std::string name = part;
        int power = 1;
        if (auto caret = part.find('^'); caret != std::string::npos) {
            name = part.substr(0, caret);
            power = std::stoi(part.substr(caret + 1));
        }
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw StructuralError("MultiIndex::parse: unknown variable '" + name + "'");
        m[static_cast<int>(it - names.begin())] += power;
    }
    return m;
}

// ===================================================================
// Poly
// ===================================================================

Poly Poly::constant(int nvars, const Scalar& c) {
    Poly p(nvars);
    p.addTerm(MultiIndex(nvars), c);
    return p;
}

Poly Poly::variable(int nvars, int v, int power) {
    if (v < 0 || v >= nvars) throw StructuralError("Poly::variable: index out of range");
    MultiIndex m(nvars);
    m[v] = power;
    return monomial(m, Scalar(1));
}

Poly Poly::monomial(MultiIndex m, const Scalar& c) {
    Poly p(m.size());
    p.addTerm(m, c);
    return p;
}

bool Poly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isZero());
}

Scalar Poly::constantTerm() const { return coeff(MultiIndex(nvars_)); }

Scalar Poly::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Poly::setCoeff(const MultiIndex& m, const Scalar& c) {
    if (m.size() != nvars_) throw StructuralError("Poly::setCoeff: index size mismatch");
    if (c.isZero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void Poly::addTerm(const MultiIndex& m, const Scalar& c) {
    if (m.size() != nvars_) throw StructuralError("Poly::addTerm: index size mismatch");
    if (c.isZero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Poly::degreeIn(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

bool Poly::isHomogeneous(const std::vector<int>& weights, int* degreeOut) const {
    if (terms_.empty()) {
        if (degreeOut) *degreeOut = 0;
        return true;
    }
    int d = terms_.begin()->first.degree(weights);
    for (const auto& [m, c] : terms_)
        if (m.degree(weights) != d) return false;
    if (degreeOut) *degreeOut = d;
    return true;
}

void Poly::checkCompatible(const Poly& o, const char* op) const {
    if (nvars_ != o.nvars_)
        throw StructuralError(std::string("Poly: variable-count mismatch in ") + op);
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    checkCompatible(o, "+");
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    checkCompatible(o, "-");
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.checkCompatible(b, "*");
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.addTerm(ma + mb, ca * cb);
    return r;
}

Poly operator*(const Scalar& c, Poly p) {
    if (c.isZero()) return Poly(p.nvars_);
    for (auto& [m, v] : p.terms_) v *= c;
    return p;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    auto ai = a.terms_.begin(), bi = b.terms_.begin();
    for (; ai != a.terms_.end() && bi != b.terms_.end(); ++ai, ++bi) {
        if (ai->first != bi->first) return ai->first < bi->first;
        if (ai->second != bi->second) {
            // Arbitrary but total: compare serialized coefficients.
            return ai->second.str() < bi->second.str();
        }
    }
    return bi != b.terms_.end();
}

Poly Poly::substituteOne(int v) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        MultiIndex m2 = m;
        m2[v] = 0;
        r.addTerm(m2, c);
    }
    return r;
}

Poly Poly::substituteZero(int v) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (m[v] == 0) r.addTerm(m, c);
    return r;
}

std::optional<Poly> Poly::divideExact(const Poly& divisor) const {
    checkCompatible(divisor, "divideExact");
    if (divisor.isZero()) throw StructuralError("Poly::divideExact: zero divisor");
    Poly rem = *this;
    Poly quot(nvars_);
    const MultiIndex& dlead = divisor.leadingMonomial();
    const Scalar dcoef = divisor.terms_.rbegin()->second;
    // Standard one-divisor division in lex order.  Any leading term of the
    // remainder that the divisor's leading term fails to divide can never be
    // cancelled later (all subsequent subtractions act below it), so the
    // division is exact iff we never hit that case.
    while (!rem.isZero()) {
        const MultiIndex& rlead = rem.leadingMonomial();
        if (!rlead.divisibleBy(dlead)) return std::nullopt;
        MultiIndex q = rlead - dlead;
        Scalar qc = rem.terms_.rbegin()->second / dcoef;
        quot.addTerm(q, qc);
        rem -= Poly::monomial(q, qc) * divisor;
    }
    return quot;
}

Poly Poly::renameVars(const std::vector<int>& varMap, int newNvars) const {
    if (static_cast<int>(varMap.size()) != nvars_)
        throw StructuralError("Poly::renameVars: map has wrong length");
    Poly r(newNvars);
    for (const auto& [m, c] : terms_) {
        MultiIndex m2(newNvars);
        for (int v = 0; v < nvars_; ++v) {
            if (m[v] == 0) continue;
            // varMap[v] == -1 declares "this variable must not occur".
            if (varMap[v] == -1)
                throw StructuralError("Poly::renameVars: dropped variable still occurs");
            if (varMap[v] < 0 || varMap[v] >= newNvars)
                throw StructuralError("Poly::renameVars: target index out of range");
            m2[varMap[v]] += m[v];
        }
        r.addTerm(m2, c);
    }
    return r;
}

const MultiIndex& Poly::trailingMonomial() const {
    if (terms_.empty()) throw StructuralError("Poly::trailingMonomial: zero polynomial");
    return terms_.begin()->first;
}

const MultiIndex& Poly::leadingMonomial() const {
    if (terms_.empty()) throw StructuralError("Poly::leadingMonomial: zero polynomial");
    return terms_.rbegin()->first;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // Display order: total degree ascending, then leftmost-variable-first
    // within a degree, so factors read "1 - q2 - q3" rather than
    // "-q3 - q2 + 1".
    std::vector<const std::pair<const MultiIndex, Scalar>*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
        int da = a->first.degree(), db = b->first.degree();
        if (da != db) return da < db;
        return b->first < a->first; // descending lex within a degree
    });
    std::string s;
    for (const auto* t : ordered) {
        const auto& [m, c] = *t;
        std::string cs = c.str();
        bool negative = cs.size() > 1 && cs[0] == '-' && c.isRational();
        if (!s.empty()) {
            s += negative ? " - " : " + ";
            if (negative) cs = cs.substr(1);
        }
        if (m.isZero()) {
            s += cs;
        } else if (cs == "1") {
            s += m.str(names);
        } else if (cs == "-1" && s.empty()) {
            s += "-" + m.str(names);
        } else {
            if (!c.isRational()) cs = "(" + cs + ")";
            s += cs + "*" + m.str(names);
        }
    }
    return s;
}

} // namespace qct::algebra
