#pragma once

#include <optional>

#include "csl/int_matrix.hpp"
#include "csl/matrix.hpp"

// The Lattice abstraction: a nonsingular structure matrix A whose columns
// express the basis in canonical coordinates, plus coordinate solving and
// the reflectivity criterion (all basis ratios (a_j,a_i)/(a_k,a_k) rational).

namespace csl {

class Lattice {
public:
    explicit Lattice(ExactMatrix a) : a_(std::move(a)) {
        if (!a_.is_square()) throw dimension_mismatch("structure matrix must be square");
        a_inv_ = inverse(a_); // throws singular_matrix
    }

    static Lattice integer_lattice(std::size_t n) { return Lattice(ExactMatrix::identity(n)); }

    std::size_t dimension() const { return a_.rows(); }
    const FieldContext& context() const { return a_.context(); }
    const ExactMatrix& structure() const { return a_; }
    const ExactMatrix& structure_inverse() const { return a_inv_; }

    ExactVector basis_column(std::size_t i) const { return a_.column(i); }

private:
    ExactMatrix a_;
    ExactMatrix a_inv_;
};

struct LatticeCoordinates {
    ExactVector coords; // c = A^{-1} x
    bool rational;      // every coordinate rational
    bool integral;      // x lies in L
};

inline LatticeCoordinates lattice_coordinates(const Lattice& l, const ExactVector& x) {
    if (x.size() != l.dimension()) throw dimension_mismatch("vector length differs from n");
    ExactVector c = mat_vec(l.structure_inverse(), x);
    bool rational = true;
    bool integral = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_rational()) {
            rational = false;
            integral = false;
            break;
        }
        if (!is_integer(c[i].as_rational())) integral = false;
    }
    return {std::move(c), rational, integral};
}

// A primitive lattice vector: integral coordinates with gcd 1, the
// canonical representative of its ray.
struct PrimitiveLatticeVector {
    std::vector<Int> coords;
    ExactVector ambient;
};

// Scale x onto the primitive lattice vector of its ray: clear rational
// denominators, then divide out the coordinate gcd.
inline PrimitiveLatticeVector clear_to_lattice(const Lattice& l, const ExactVector& x) {
    if (x.is_zero()) throw zero_vector("cannot clear the zero vector");
    LatticeCoordinates lc = lattice_coordinates(l, x);
    if (!lc.rational) throw irrational_coordinates("vector has irrational lattice coordinates");
    Int t = 1;
    for (std::size_t i = 0; i < lc.coords.size(); ++i)
        t = lcm_of(t, denominator_of(lc.coords[i].as_rational()));
    std::vector<Int> w(lc.coords.size());
    Int g = 0;
    for (std::size_t i = 0; i < lc.coords.size(); ++i) {
        const Rational& c = lc.coords[i].as_rational();
        w[i] = numerator_of(c) * (t / denominator_of(c));
        g = gcd_of(g, w[i]);
    }
    for (Int& wi : w) wi /= g;
    std::vector<FieldElement> coords_exact;
    coords_exact.reserve(w.size());
    for (const Int& wi : w) coords_exact.emplace_back(Rational(wi), Rational(0), l.context());
    ExactVector ambient = mat_vec(l.structure(), ExactVector(std::move(coords_exact)));
    return {std::move(w), std::move(ambient)};
}

struct ReflectivityWitness {
    std::size_t i, j, k;
    FieldElement ratio; // (a_j, a_i) / (a_k, a_k), irrational
};

struct ReflectivityReport {
    bool reflective;
    std::optional<ReflectivityWitness> witness;
};

// Every nonzero lattice vector defines a coincidence reflection iff all
// ratios (a_j,a_i)/(a_k,a_k) are rational; only the finitely many basis
// ratios are ever checked. Rational Gram short-circuits to true.
inline ReflectivityReport reflectivity(const Lattice& l) {
    const std::size_t n = l.dimension();
    ExactMatrix g = gram(l.structure());
    if (is_rational_matrix(g)) return {true, std::nullopt};
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FieldElement ratio = g.at(j, i) / g.at(k, k);
                if (!ratio.is_rational())
                    return {false, ReflectivityWitness{i, j, k, std::move(ratio)}};
            }
    return {true, std::nullopt};
}

inline bool is_reflective(const Lattice& l) { return reflectivity(l).reflective; }

// Does the reflection by x map L onto a commensurate lattice? For x in the
// real span of L this is the rationality of every (a_i,x)/(x,x).
inline bool vector_defines_coincidence_reflection(const Lattice& l, const ExactVector& x) {
    if (x.is_zero()) throw zero_vector("reflection vector must be nonzero");
    FieldElement xx = inner_product(x, x);
    for (std::size_t i = 0; i < l.dimension(); ++i) {
        if (!(inner_product(l.basis_column(i), x) / xx).is_rational()) return false;
    }
    return true;
}

} // namespace csl
