#pragma once

#include "csl/coincidence.hpp"

// Reflection primitives and the constructive decomposition of a coincidence
// isometry into at most n coincidence reflections by lattice vectors.

namespace csl {

// R_v = I - (2/(v,v)) v v^t; orthogonal, sends v to -v, fixes v-perp.
inline ExactMatrix reflection_matrix(const ExactVector& v) {
    if (v.is_zero()) throw zero_vector("reflection vector must be nonzero");
    const std::size_t n = v.size();
    const FieldContext& ctx = v.context();
    FieldElement coef = FieldElement(Rational(2), Rational(0), ctx) / inner_product(v, v);
    ExactMatrix r = ExactMatrix::identity(n, ctx);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) -= coef * v[i] * v[j];
    return r;
}

// Component of x orthogonal to b: x - ((x,b)/(b,b)) b.
inline ExactVector project_off(const ExactVector& b, const ExactVector& x) {
    if (b.is_zero()) throw zero_vector("projection axis must be nonzero");
    FieldElement coef = inner_product(x, b) / inner_product(b, b);
    return x - coef * b;
}

// Ordered lattice vectors whose reflections compose (left to right) to the
// target isometry.
struct ReflectionSequence {
    std::vector<PrimitiveLatticeVector> vectors;
    ExactMatrix target;
};

// Greedy sweep over the basis columns: whenever the residual map moves b_i,
// reflect by the lattice ray of S b_i - b_i to pin it. Each difference
// vector is orthogonal to every earlier-fixed b_j (S is an isometry), so
// the fixes never undo. Emits at most n reflections with R_{v_1}...R_{v_k}
// equal to the target exactly.
inline ReflectionSequence decompose(const Lattice& l, const ExactMatrix& r) {
    ReflectivityReport refl = reflectivity(l);
    if (!refl.reflective) {
        const ReflectivityWitness& w = *refl.witness;
        throw not_reflective_lattice("lattice fails the rational-ratio condition at (" +
                                     std::to_string(w.i) + "," + std::to_string(w.j) + "," +
                                     std::to_string(w.k) + ")");
    }
    if (!oc_member(l, r).accepted())
        throw not_coincidence_isometry("target is not a coincidence isometry of the lattice");

    const std::size_t n = l.dimension();
    ReflectionSequence seq{{}, r};
    ExactMatrix s = r;
    for (std::size_t i = 0; i < n; ++i) {
        ExactVector b = l.basis_column(i);
        ExactVector sb = mat_vec(s, b);
        if (sb == b) continue;
        PrimitiveLatticeVector v = clear_to_lattice(l, sb - b);
        s = mat_mul(reflection_matrix(v.ambient), s);
        seq.vectors.push_back(std::move(v));
        // The residual must now fix b_1..b_i.
        for (std::size_t j = 0; j <= i; ++j) {
            ExactVector bj = l.basis_column(j);
            if (!(mat_vec(s, bj) == bj))
                throw error("internal: decomposition lost a fixed basis vector");
        }
    }
    if (!(s == ExactMatrix::identity(n, s.context())))
        throw error("internal: decomposition residual is not the identity");
    return seq;
}

// Check a sequence end to end: vectors are primitive lattice vectors, each
// reflection is itself a coincidence isometry of L, and the ordered product
// reproduces the target. Ambient vectors are re-derived from the lattice.
inline bool verify(const ReflectionSequence& seq, const Lattice& l) {
    const std::size_t n = l.dimension();
    if (seq.vectors.size() > n) return false;
    if (!(seq.target.is_square() && seq.target.rows() == n)) return false;
    ExactMatrix product = ExactMatrix::identity(n, l.context());
    for (const PrimitiveLatticeVector& v : seq.vectors) {
        if (v.coords.size() != n) return false;
        Int g = 0;
        bool nonzero = false;
        for (const Int& c : v.coords) {
            if (c != 0) nonzero = true;
            g = gcd_of(g, c);
        }
        if (!nonzero || g != 1) return false;
        std::vector<FieldElement> coords;
        coords.reserve(n);
        for (const Int& c : v.coords) coords.emplace_back(Rational(c), Rational(0), l.context());
        ExactVector ambient = mat_vec(l.structure(), ExactVector(std::move(coords)));
        ExactMatrix refl = reflection_matrix(ambient);
        if (!oc_member(l, refl).accepted()) return false;
        product = mat_mul(product, refl);
    }
    return product == seq.target;
}

} // namespace csl
