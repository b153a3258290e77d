#pragma once

#include <set>

#include "csl/matrix.hpp"
#include "csl/numeric.hpp"

// Computational content of "OC(Z^n) is infinitely generated": a finite
// generating set only involves finitely many primes in denominators, and a
// reflection by e_1 + y e_2 can always be made to introduce a fresh one.

namespace csl {

struct PrimeBudget {
    std::set<Int> primes;

    bool contains(const Int& p) const { return primes.count(p) != 0; }
};

// Union of denominator prime supports over all entries.
inline std::set<Int> matrix_prime_support(const ExactMatrix& m) {
    if (!is_rational_matrix(m)) throw irrational_entries("matrix has surd entries");
    std::set<Int> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto ps = prime_support(m.at(i, j).as_rational());
            out.insert(ps.begin(), ps.end());
        }
    return out;
}

// Rational reflection matrix for v = e_1 + y e_2 in dimension n >= 2; the
// identity outside the leading 2x2 block. First column is
// ((y^2-1)/(y^2+1), -2y/(y^2+1), 0, ...).
inline ExactMatrix reflection_e1_plus_y_e2(const Int& y, std::size_t n) {
    if (n < 2) throw dimension_mismatch("need dimension >= 2");
    Rational den = Rational(y) * Rational(y) + 1;
    Rational c = (Rational(y) * Rational(y) - 1) / den;
    Rational s = -2 * Rational(y) / den;
    ExactMatrix r = ExactMatrix::identity(n);
    r.at(0, 0) = FieldElement(c);
    r.at(0, 1) = FieldElement(s);
    r.at(1, 0) = FieldElement(s);
    r.at(1, 1) = FieldElement(-c);
    return r;
}

struct EscapeWitness {
    Int y;
    Int prime; // divides 1 + y^2 and lies outside the budget
};

// Smallest y >= 1 whose 1 + y^2 carries a prime outside P. With the scan
// disabled, falls back to y = product of all primes up to max(P), which is
// coprime to 1 + y^2 by construction.
inline EscapeWitness escape_witness(const PrimeBudget& budget, bool exhaustive_scan = true) {
    if (exhaustive_scan) {
        for (Int y = 1;; ++y) {
            for (const Int& p : prime_divisors(y * y + 1))
                if (!budget.contains(p)) return {y, p};
        }
    }
    Int y = 1;
    if (!budget.primes.empty()) {
        Int top = *budget.primes.rbegin();
        for (Int p = 2; p <= top; ++p) {
            if (prime_divisors(p).size() == 1 && prime_divisors(p)[0] == p) y *= p;
        }
    }
    std::vector<Int> ps = prime_divisors(y * y + 1);
    return {y, ps.front()};
}

struct CensusRound {
    PrimeBudget budget; // budget the witness escapes (before enlargement)
    EscapeWitness witness;
    ExactMatrix reflection;
};

// Iterated escape starting from the empty budget. Each round enlarges the
// budget with the witness prime and the reflection's denominator support,
// so the recorded budgets grow strictly.
inline std::vector<CensusRound> growth_run(int rounds) {
    if (rounds < 1) throw invalid_params("rounds must be >= 1");
    std::vector<CensusRound> out;
    PrimeBudget budget;
    for (int i = 0; i < rounds; ++i) {
        EscapeWitness w = escape_witness(budget);
        ExactMatrix r = reflection_e1_plus_y_e2(w.y, 2);
        out.push_back({budget, w, r});
        PrimeBudget next = budget;
        next.primes.insert(w.prime);
        auto support = matrix_prime_support(r);
        next.primes.insert(support.begin(), support.end());
        budget = std::move(next);
    }
    return out;
}

} // namespace csl
