#pragma once

#include <random>

#include "csl/reflection.hpp"

// Classification of OC(L) for the planar family with structure matrix
// [[a, 1], [0, b]], a, b > 0. The four cases depend only on whether a, b^2
// and a/(1+b^2) are rational, so the classifier takes (a, b^2) and never
// needs b itself; the sampling spot check does, and demands a representable b.

namespace csl {

struct PlanarFamilyParams {
    FieldElement a;
    FieldElement b_squared;

    PlanarFamilyParams(FieldElement a_, FieldElement b2_)
        : a(std::move(a_)), b_squared(std::move(b2_)) {
        if (a.sign() <= 0 || b_squared.sign() <= 0)
            throw invalid_params("family parameters a and b^2 must be positive");
    }
};

enum class PlanarCase {
    reflection_generated = 1, // a, b^2 rational: reflections generate OC(L)
    z2xz2_fix_a1 = 2,         // a rational, b^2 not: OC(L) = {+-I, +-R_a1}
    z2xz2_fix_a2 = 3,         // a irrational, a/(1+b^2) rational: {+-I, +-R_a2}
    center_only = 4,          // both irrational: OC(L) = {+-I}
};

struct PlanarClassification {
    PlanarCase which;
    // Involutions in lattice coordinates (rational); the distinguished
    // generator beyond +-I for cases 2 and 3, empty otherwise.
    std::vector<ExactMatrix> generators;
};

inline PlanarClassification classify(const PlanarFamilyParams& p) {
    FieldContext ctx = unify(p.a.context(), p.b_squared.context());
    FieldElement one(Rational(1), Rational(0), ctx);
    FieldElement two(Rational(2), Rational(0), ctx);
    bool a_rational = p.a.is_rational();
    if (a_rational && p.b_squared.is_rational()) return {PlanarCase::reflection_generated, {}};
    if (a_rational) {
        // R_{a_1} in lattice coordinates: [[-1, -2/a], [0, 1]].
        FieldElement c = -(two / p.a);
        ExactMatrix gen{{-one, c}, {FieldElement(Rational(0), Rational(0), ctx), one}};
        return {PlanarCase::z2xz2_fix_a1, {std::move(gen)}};
    }
    FieldElement q = p.a / (one + p.b_squared);
    if (q.is_rational()) {
        // R_{a_2} in lattice coordinates: [[1, 0], [-2a/(1+b^2), -1]].
        ExactMatrix gen{{one, FieldElement(Rational(0), Rational(0), ctx)},
                        {-(two * q), -one}};
        return {PlanarCase::z2xz2_fix_a2, {std::move(gen)}};
    }
    return {PlanarCase::center_only, {}};
}

struct SpotCheckReport {
    PlanarCase which;
    int trials = 0;
    int reflective_vectors = 0;  // sampled lattice vectors defining coincidence reflections
    int predicted_reflective = 0; // what the case table predicts for those samples
    int rotations_tested = 0;
    int rotations_accepted = 0; // rational rotations passing oc_member (+-I included)
    bool consistent = false;
};

// Samples random lattice vectors and rational-rotation candidates on the
// concrete lattice and checks them against the classified case: case 1
// expects every vector to define a coincidence reflection, cases 2/3 only
// the parallel/perpendicular families of the distinguished axis, case 4
// none at all and no rotations beyond +-I.
inline SpotCheckReport spot_check(const PlanarFamilyParams& p, int trials,
                                  std::uint64_t seed = 20090) {
    PlanarClassification cls = classify(p);
    auto b = field_sqrt(p.b_squared);
    if (!b) throw unrepresentable_b("b is not representable in this quadratic field");

    FieldContext ctx = unify(p.a.context(), p.b_squared.context());
    FieldElement zero(Rational(0), Rational(0), ctx);
    FieldElement one(Rational(1), Rational(0), ctx);
    Lattice l(ExactMatrix{{p.a, one}, {zero, *b}});
    ExactVector a1 = l.basis_column(0);
    ExactVector a2 = l.basis_column(1);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-9, 9);

    SpotCheckReport report;
    report.which = cls.which;
    report.trials = trials;
    bool consistent = true;

    for (int trial = 0; trial < trials; ++trial) {
        Rational j(coord(rng)), k(coord(rng));
        if (j == 0 && k == 0) j = 1;
        ExactVector x = mat_vec(l.structure(),
                                ExactVector{FieldElement(j, Rational(0), ctx),
                                            FieldElement(k, Rational(0), ctx)});
        bool found = vector_defines_coincidence_reflection(l, x);
        bool predicted = false;
        switch (cls.which) {
        case PlanarCase::reflection_generated:
            predicted = true;
            break;
        case PlanarCase::z2xz2_fix_a1:
            predicted = (k == 0) || inner_product(x, a1).is_zero();
            break;
        case PlanarCase::z2xz2_fix_a2:
            predicted = (j == 0) || inner_product(x, a2).is_zero();
            break;
        case PlanarCase::center_only:
            predicted = false;
            break;
        }
        if (found) ++report.reflective_vectors;
        if (predicted) ++report.predicted_reflective;
        if (found != predicted) consistent = false;
    }

    // Rational rotation candidates from Pythagorean parameters.
    std::uniform_int_distribution<int> param(1, 6);
    for (int trial = 0; trial < trials; ++trial) {
        ExactMatrix rot = ExactMatrix::identity(2, ctx);
        if (trial % 8 == 0) {
            if (trial % 16 == 8) rot = scalar_mul(-one, rot); // keep +-I in the mix
        } else {
            Rational pp(param(rng)), qq(param(rng));
            Rational den = pp * pp + qq * qq;
            Rational c = (pp * pp - qq * qq) / den;
            Rational s = 2 * pp * qq / den;
            rot = ExactMatrix{{FieldElement(c, Rational(0), ctx), FieldElement(-s, Rational(0), ctx)},
                              {FieldElement(s, Rational(0), ctx), FieldElement(c, Rational(0), ctx)}};
        }
        ++report.rotations_tested;
        bool accepted = oc_member(l, rot).accepted();
        if (accepted) ++report.rotations_accepted;
        if (cls.which == PlanarCase::center_only) {
            bool is_pm_identity = rot == ExactMatrix::identity(2, ctx) ||
                                  rot == scalar_mul(-one, ExactMatrix::identity(2, ctx));
            if (accepted != is_pm_identity) consistent = false;
        }
    }

    report.consistent = consistent;
    return report;
}

} // namespace csl
