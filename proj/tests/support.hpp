#pragma once

#include <random>
#include <vector>

#include "csl/csl.hpp"

// Deterministic fixtures and random generators shared by the unit and
// acceptance suites.

namespace testsupport {

using namespace csl;

using Rng = std::mt19937_64;

inline FieldElement fe(long long num, long long den = 1) {
    return FieldElement(Rational(num, den));
}

inline FieldElement fe(long long rn, long long rd, long long sn, long long sd, long long d) {
    return FieldElement(Rational(rn, rd), Rational(sn, sd), FieldContext::quadratic(d));
}

// Example 4.1 fixtures: the rhombic lattice and its coincidence isometry.
inline ExactMatrix example41_structure() {
    FieldContext q5 = FieldContext::quadratic(5);
    return ExactMatrix{{FieldElement(Rational(1), Rational(0), q5),
                        FieldElement(Rational(2, 3), Rational(0), q5)},
                       {FieldElement(Rational(0), Rational(0), q5),
                        FieldElement(Rational(0), Rational(1, 3), q5)}};
}

inline ExactMatrix example41_isometry() {
    FieldContext q5 = FieldContext::quadratic(5);
    return ExactMatrix{{FieldElement(Rational(-19, 21), Rational(0), q5),
                        FieldElement(Rational(0), Rational(-4, 21), q5)},
                       {FieldElement(Rational(0), Rational(4, 21), q5),
                        FieldElement(Rational(-19, 21), Rational(0), q5)}};
}

inline ExactMatrix example41_conjugate() {
    return ExactMatrix{{fe(-9, 7), fe(-4, 7)}, {fe(4, 7), fe(-11, 21)}};
}

inline Rational random_rational(Rng& rng, int max_abs_num = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, int max_abs_num = 9, int max_den = 9) {
    while (true) {
        Rational q = random_rational(rng, max_abs_num, max_den);
        if (q != 0) return q;
    }
}

inline FieldElement random_field_element(Rng& rng, const FieldContext& ctx, int max_abs = 9) {
    if (!ctx.is_quadratic()) return FieldElement(random_rational(rng, max_abs));
    return FieldElement(random_rational(rng, max_abs), random_rational(rng, max_abs), ctx);
}

inline ExactMatrix random_rational_matrix(Rng& rng, std::size_t n, int max_abs = 9) {
    std::vector<FieldElement> entries;
    for (std::size_t k = 0; k < n * n; ++k)
        entries.push_back(FieldElement(random_rational(rng, max_abs)));
    return ExactMatrix(n, n, std::move(entries));
}

inline ExactMatrix random_invertible_rational_matrix(Rng& rng, std::size_t n, int max_abs = 9) {
    while (true) {
        ExactMatrix m = random_rational_matrix(rng, n, max_abs);
        if (!determinant(m).is_zero()) return m;
    }
}

inline ExactMatrix random_invertible_quadratic_matrix(Rng& rng, std::size_t n, long long d,
                                                      int max_abs = 4) {
    FieldContext ctx = FieldContext::quadratic(d);
    while (true) {
        std::vector<FieldElement> entries;
        for (std::size_t k = 0; k < n * n; ++k)
            entries.push_back(random_field_element(rng, ctx, max_abs));
        ExactMatrix m(n, n, std::move(entries));
        if (!determinant(m).is_zero()) return m;
    }
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_abs) {
    std::uniform_int_distribution<int> dist(-max_abs, max_abs);
    IntMatrix m = IntMatrix::zero(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

inline IntMatrix random_full_rank_int_matrix(Rng& rng, std::size_t n, int max_abs) {
    while (true) {
        IntMatrix m = random_int_matrix(rng, n, n, max_abs);
        if (int_determinant(m) != 0) return m;
    }
}

// Product of random elementary column operations; |det| = 1.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int ops = 12) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    IntMatrix u = IntMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(pick(rng));
        std::size_t j = static_cast<std::size_t>(pick(rng));
        if (i == j) {
            for (std::size_t r = 0; r < n; ++r) u.at(r, i) = -u.at(r, i);
            continue;
        }
        Int c = coef(rng);
        for (std::size_t r = 0; r < n; ++r) u.at(r, j) += c * u.at(r, i);
    }
    return u;
}

inline std::vector<Int> random_nonzero_int_vector(Rng& rng, std::size_t n, int max_abs = 9) {
    std::uniform_int_distribution<int> dist(-max_abs, max_abs);
    while (true) {
        std::vector<Int> v(n);
        bool nonzero = false;
        for (auto& x : v) {
            x = dist(rng);
            if (x != 0) nonzero = true;
        }
        if (nonzero) return v;
    }
}

inline ExactVector to_exact_vector(const std::vector<Int>& v, const FieldContext& ctx = {}) {
    std::vector<FieldElement> entries;
    entries.reserve(v.size());
    for (const Int& x : v) entries.emplace_back(Rational(x), Rational(0), ctx);
    return ExactVector(std::move(entries));
}

// Product of k reflections by random integer vectors: a random rational
// orthogonal matrix, and a coincidence isometry of Z^n by construction.
inline ExactMatrix random_reflection_product(Rng& rng, std::size_t n, int k, int max_abs = 9) {
    ExactMatrix out = ExactMatrix::identity(n);
    for (int i = 0; i < k; ++i)
        out = mat_mul(out, reflection_matrix(to_exact_vector(random_nonzero_int_vector(rng, n, max_abs))));
    return out;
}

// Reflective lattice with a mixed rational/quadratic structure matrix:
// an irrational seed with rational Gram times a random rational matrix.
inline ExactMatrix random_reflective_structure(Rng& rng, std::size_t n, long long d) {
    FieldContext ctx = FieldContext::quadratic(d);
    FieldElement zero(Rational(0), Rational(0), ctx);
    FieldElement one(Rational(1), Rational(0), ctx);
    ExactMatrix seed = ExactMatrix::identity(n, ctx);
    seed.at(0, 0) = one;
    seed.at(0, 1) = one;
    seed.at(1, 0) = zero;
    seed.at(1, 1) = FieldElement::sqrt_of_radicand(ctx); // gram(seed) rational
    ExactMatrix b = random_invertible_rational_matrix(rng, n, 4);
    return mat_mul(seed, b);
}

// Non-reflective structure: scale one column block by sqrt(d) so a cross
// Gram entry (hence a basis ratio) goes irrational; retries until the
// witness entry is nonzero.
inline ExactMatrix random_nonreflective_structure(Rng& rng, std::size_t n, long long d) {
    FieldContext ctx = FieldContext::quadratic(d);
    while (true) {
        ExactMatrix b = random_invertible_rational_matrix(rng, n, 4);
        ExactMatrix g = gram(b);
        bool coupled = false;
        for (std::size_t j = 1; j < n && !coupled; ++j)
            if (!g.at(0, j).is_zero()) coupled = true;
        if (!coupled) continue;
        ExactMatrix a = ExactMatrix::zero(n, n, ctx);
        FieldElement surd = FieldElement::sqrt_of_radicand(ctx);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = j == 0 ? surd * b.at(i, j).coerced(ctx) : b.at(i, j).coerced(ctx);
        return a;
    }
}

} // namespace testsupport
