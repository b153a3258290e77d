#pragma once

#include <optional>

#include "csl/lattice.hpp"

// Group-membership decisions: commensurability, the coincidence symmetry
// group A GL_n(Q) A^{-1}, and its isometry subgroup OC(L). Acceptance comes
// with a certificate carrying the rational conjugate, the coincidence index
// and an integer basis of L n TL so results are independently checkable.

namespace csl {

// Two structure matrices span commensurate lattices iff A2^{-1} A1 is rational.
inline bool commensurate(const ExactMatrix& a1, const ExactMatrix& a2) {
    if (!a1.is_square() || !a2.is_square() || a1.rows() != a2.rows())
        throw dimension_mismatch("structure matrices must be square of equal size");
    return is_rational_matrix(mat_mul(inverse(a2), a1));
}

struct CoincidenceCertificate {
    ExactMatrix m;               // A^{-1} T A, rational
    Int sigma;                   // [L : L n TL]
    SublatticeBasis intersection; // basis of L n TL in lattice coordinates
    bool is_isometry;            // ambient T orthogonal
};

struct IrrationalWitness {
    std::size_t row, col;
    FieldElement value;
};

enum class Membership {
    member,
    not_coincidence, // conjugate A^{-1} T A has an irrational entry
    not_orthogonal,  // candidate failed A^t A = I (oc_member only)
};

struct MembershipResult {
    Membership status;
    std::optional<CoincidenceCertificate> certificate;
    std::optional<IrrationalWitness> witness;

    bool accepted() const { return status == Membership::member; }
};

// CSG membership: T (canonical-basis matrix) is a coincidence symmetry of L
// iff M = A^{-1} T A is rational.
inline MembershipResult csg_member(const Lattice& l, const ExactMatrix& t) {
    if (!t.is_square() || t.rows() != l.dimension())
        throw dimension_mismatch("candidate matrix size differs from n");
    ExactMatrix m = mat_mul(mat_mul(l.structure_inverse(), t), l.structure());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_rational())
                return {Membership::not_coincidence, std::nullopt,
                        IrrationalWitness{i, j, m.at(i, j)}};
    if (determinant(m).is_zero()) throw singular_matrix("candidate map is singular");
    SublatticeBasis basis = intersect_with_rational_image(m);
    Int sigma = basis.index;
    return {Membership::member,
            CoincidenceCertificate{std::move(m), std::move(sigma), std::move(basis),
                                   is_orthogonal(t)},
            std::nullopt};
}

// OC(L) membership: orthogonality in the ambient basis, then CSG membership.
inline MembershipResult oc_member(const Lattice& l, const ExactMatrix& r) {
    if (!r.is_square() || r.rows() != l.dimension())
        throw dimension_mismatch("candidate matrix size differs from n");
    if (!is_orthogonal(r)) return {Membership::not_orthogonal, std::nullopt, std::nullopt};
    return csg_member(l, r);
}

} // namespace csl
