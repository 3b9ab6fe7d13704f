/*
 * toric.cpp
 * ---------
 * Divisor class bookkeeping, Stanley-Reisner presentations, and
 * intersection degrees.  All checks are exact; the combinatorics are
 * tiny (fans here have at most nine rays), so faces and non-faces are
 * enumerated exhaustively.
 */
#include "qct/toric.hpp"

#include <algorithm>
#include <set>

#include "qct/errors.hpp"

namespace qct::toric {

namespace {

/// R_i as a polynomial in the nef basis variables m_1..m_k.
[[nodiscard]] Poly rayClassPoly(const DivisorClassData& data, int i) {
    const int k = data.numClasses();
    Poly p = Poly::constant(k, Scalar(0));
    for (int j = 0; j < k; ++j) {
        const long long c = data.rayClasses[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (c != 0) p += Scalar(static_cast<long>(c)) * Poly::variable(k, j);
    }
    return p;
}

} // namespace

// ======================================================= divisor data ====

void check_divisor_data(const Fan& fan, const DivisorClassData& data) {
    check_well_formed(fan);
    const int n = fan.numRays();
    const int k = data.numClasses();
    if (k < 1) throw StructuralError("divisor data: empty nef basis");
    if (static_cast<int>(data.curveNames.size()) != k)
        throw StructuralError("divisor data: curve basis size must match nef basis size");
    if (static_cast<int>(data.rayClasses.size()) != n)
        throw StructuralError("divisor data: need one class per ray");
    for (const auto& row : data.rayClasses)
        if (static_cast<int>(row.size()) != k)
            throw StructuralError("divisor data: ray class has wrong number of coordinates");
    if (static_cast<int>(data.c1.size()) != k)
        throw StructuralError("divisor data: c1 has wrong number of coordinates");

    // Lattice linear relations: sum_i <e_t, r_i> R_i = 0 in the m-basis.
    for (int t = 0; t < fan.dim; ++t)
        for (int j = 0; j < k; ++j) {
            long long s = 0;
            for (int i = 0; i < n; ++i)
                s += fan.rays[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *
                     data.rayClasses[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (s != 0)
                throw StructuralError("divisor data: lattice relation fails at coordinate " +
                                      std::to_string(t + 1) + ", class " + data.nefNames[static_cast<std::size_t>(j)]);
        }

    // The ray classes must span all k degree-2 directions.
    ScalarMat m(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j)
            m(i, j) = Scalar(static_cast<long>(data.rayClasses[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    if (algebra::rank(m) != k)
        throw StructuralError("divisor data: ray classes do not span the nef basis");

    // Anticanonical: the classes sum to c1.
    for (int j = 0; j < k; ++j) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += data.rayClasses[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (s != data.c1[static_cast<std::size_t>(j)])
            throw StructuralError("divisor data: ray classes do not sum to c1 in class " +
                                  data.nefNames[static_cast<std::size_t>(j)]);
    }
}

std::vector<long long> intersection_degrees(const Fan& fan, const DivisorClassData& data,
                                            const MultiIndex& beta) {
    check_divisor_data(fan, data);
    if (beta.size() != data.numClasses())
        throw StructuralError("intersection_degrees: beta has wrong number of curve coordinates");
    std::vector<long long> out(static_cast<std::size_t>(fan.numRays()), 0);
    for (int i = 0; i < fan.numRays(); ++i)
        for (int j = 0; j < data.numClasses(); ++j)
            out[static_cast<std::size_t>(i)] +=
                data.rayClasses[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * beta[j];
    return out;
}

std::vector<int> quantum_degrees(const Fan& fan, const DivisorClassData& data) {
    check_divisor_data(fan, data);
    std::vector<int> out;
    out.reserve(data.c1.size());
    for (long long c : data.c1) out.push_back(static_cast<int>(2 * c));
    return out;
}

// ========================================== Stanley-Reisner presentation ====

std::vector<std::vector<int>> minimal_non_faces(const Fan& fan) {
    check_well_formed(fan);
    const int n = fan.numRays();

    // Faces of the fan = subsets of maximal cones (exhaustive: cones have
    // at most dim <= 6 rays here).
    std::set<std::vector<int>> faces;
    for (const auto& cone : fan.maxCones) {
        const int c = static_cast<int>(cone.size());
        for (unsigned mask = 0; mask < (1u << c); ++mask) {
            std::vector<int> sub;
            for (int t = 0; t < c; ++t)
                if (mask & (1u << t)) sub.push_back(cone[static_cast<std::size_t>(t)]);
            faces.insert(std::move(sub));
        }
    }

    // Minimal non-faces: not a face, every maximal proper subset a face.
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(i);
        if (faces.count(sub)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < sub.size() && minimal; ++drop) {
            std::vector<int> smaller;
            for (std::size_t t = 0; t < sub.size(); ++t)
                if (t != drop) smaller.push_back(sub[t]);
            if (!faces.count(smaller)) minimal = false;
        }
        if (minimal) out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

StanleyReisnerPresentation stanley_reisner_presentation(const Fan& fan) {
    const FanReport rep = validate_fan(fan);
    if (!rep.smooth)
        throw UnsupportedFan("stanley_reisner_presentation: fan is not smooth");
    if (!rep.pseudoComplete)
        throw UnsupportedFan("stanley_reisner_presentation: fan failed the completeness battery");

    const int n = fan.numRays();
    StanleyReisnerPresentation pres;
    for (int i = 0; i < n; ++i) pres.rayNames.push_back("R" + std::to_string(i + 1));

    // Linear relations, one per lattice coordinate.
    for (int t = 0; t < fan.dim; ++t) {
        Poly p = Poly::constant(n, Scalar(0));
        for (int i = 0; i < n; ++i) {
            const long long c = fan.rays[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
            if (c != 0) p += Scalar(static_cast<long>(c)) * Poly::variable(n, i);
        }
        if (!p.terms().empty()) pres.linearRelations.push_back(std::move(p));
    }

    pres.minimalNonFaces = minimal_non_faces(fan);
    for (const auto& nonFace : pres.minimalNonFaces) {
        Poly p = Poly::constant(n, Scalar(1));
        for (int i : nonFace) p = p * Poly::variable(n, i);
        pres.srRelations.push_back(std::move(p));
    }
    return pres;
}

std::vector<Poly> relations_in_nef_basis(const Fan& fan, const DivisorClassData& data,
                                         const StanleyReisnerPresentation& pres) {
    check_divisor_data(fan, data);
    const int k = data.numClasses();
    std::vector<Poly> classes;
    classes.reserve(static_cast<std::size_t>(fan.numRays()));
    for (int i = 0; i < fan.numRays(); ++i) classes.push_back(rayClassPoly(data, i));
    std::vector<Poly> out;
    out.reserve(pres.minimalNonFaces.size());
    for (const auto& nonFace : pres.minimalNonFaces) {
        Poly p = Poly::constant(k, Scalar(1));
        for (int i : nonFace) p = p * classes[static_cast<std::size_t>(i)];
        out.push_back(std::move(p));
    }
    return out;
}

ring::PresentedRing cohomology_ring_from_fan(const Fan& fan, const DivisorClassData& data,
                                             std::optional<std::vector<Poly>> basis) {
    const StanleyReisnerPresentation pres = stanley_reisner_presentation(fan);
    std::vector<Poly> rels = relations_in_nef_basis(fan, data, pres);

    // Normalization: the rays of any maximal cone cut out a fixed point
    // transversally, so the product of their classes integrates to 1.
    Poly fixedPoint = Poly::constant(data.numClasses(), Scalar(1));
    for (int i : fan.maxCones.front()) fixedPoint = fixedPoint * rayClassPoly(data, i);

    std::vector<int> degrees(static_cast<std::size_t>(data.numClasses()), 2);
    return ring::PresentedRing(data.nefNames, degrees, std::move(rels), std::move(basis),
                               {fixedPoint, Scalar(1)});
}

} // namespace qct::toric
