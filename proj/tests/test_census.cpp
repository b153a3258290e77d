#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace csl;
using testsupport::fe;

TEST_CASE("matrix prime support") {
    CHECK(matrix_prime_support(ExactMatrix::identity(3)) == std::set<Int>{});
    CHECK(matrix_prime_support(testsupport::example41_conjugate()) == std::set<Int>{3, 7});
    CHECK(matrix_prime_support(ExactMatrix{{fe(3, 5), fe(-4, 5)}, {fe(-4, 5), fe(-3, 5)}}) ==
          std::set<Int>{5});
    CHECK_THROWS_AS(matrix_prime_support(testsupport::example41_isometry()),
                    irrational_entries);
}

TEST_CASE("reflections in the e1 + y e2 family") {
    CHECK(reflection_e1_plus_y_e2(1, 2) == ExactMatrix{{fe(0), fe(-1)}, {fe(-1), fe(0)}});
    CHECK(reflection_e1_plus_y_e2(2, 2) ==
          ExactMatrix{{fe(3, 5), fe(-4, 5)}, {fe(-4, 5), fe(-3, 5)}});
    ExactMatrix r0 = reflection_e1_plus_y_e2(0, 3);
    CHECK(r0 == ExactMatrix{{fe(-1), fe(0), fe(0)}, {fe(0), fe(1), fe(0)}, {fe(0), fe(0), fe(1)}});
    CHECK_THROWS_AS(reflection_e1_plus_y_e2(1, 1), dimension_mismatch);

    testsupport::Rng rng(71);
    std::uniform_int_distribution<int> ydist(0, 40);
    for (int trial = 0; trial < 40; ++trial) {
        Int y = ydist(rng);
        std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        ExactMatrix r = reflection_e1_plus_y_e2(y, n);
        CHECK(is_orthogonal(r));
        CHECK(mat_mul(r, r) == ExactMatrix::identity(n));
        // Same matrix as the generic reflection constructor.
        std::vector<Int> v(n, Int(0));
        v[0] = 1;
        v[1] = y;
        CHECK(r == reflection_matrix(testsupport::to_exact_vector(v)));
        // Support never exceeds the prime factors of 1 + y^2.
        auto factors = prime_divisors(y * y + 1);
        std::set<Int> allowed(factors.begin(), factors.end());
        for (const Int& p : matrix_prime_support(r)) CHECK(allowed.count(p) == 1);
    }
}

TEST_CASE("escape witnesses") {
    CHECK(escape_witness(PrimeBudget{}).y == 1);
    CHECK(escape_witness(PrimeBudget{}).prime == 2);
    CHECK(escape_witness(PrimeBudget{{Int(2)}}).y == 2);
    CHECK(escape_witness(PrimeBudget{{Int(2)}}).prime == 5);
    // y = 3 gives 10 = 2*5, all inside {2, 5}; y = 4 gives 17.
    CHECK(escape_witness(PrimeBudget{{Int(2), Int(5)}}).y == 4);
    CHECK(escape_witness(PrimeBudget{{Int(2), Int(5)}}).prime == 17);
}

TEST_CASE("escape witness fallback construction") {
    PrimeBudget p{{Int(2), Int(5)}};
    EscapeWitness w = escape_witness(p, false);
    CHECK(w.y == 2 * 3 * 5); // product of all primes up to max(P)
    CHECK((w.y * w.y + 1) % w.prime == 0);
    CHECK_FALSE(p.contains(w.prime));
}

TEST_CASE("growth run") {
    CHECK_THROWS_AS(growth_run(0), invalid_params);

    std::vector<CensusRound> rounds = growth_run(10);
    REQUIRE(rounds.size() == 10);
    CHECK(rounds[0].budget.primes.empty());
    CHECK(rounds[0].witness.y == 1);
    CHECK(rounds[0].witness.prime == 2);
    CHECK(rounds[1].witness.y == 2);
    CHECK(rounds[1].witness.prime == 5);
    for (std::size_t i = 0; i < rounds.size(); ++i) {
        const CensusRound& r = rounds[i];
        CHECK((r.witness.y * r.witness.y + 1) % r.witness.prime == 0);
        CHECK_FALSE(r.budget.contains(r.witness.prime));
        if (i + 1 < rounds.size()) {
            // Strictly growing budgets: the next round's budget contains
            // this one plus the fresh prime.
            const PrimeBudget& next = rounds[i + 1].budget;
            CHECK(next.primes.size() > r.budget.primes.size());
            for (const Int& p : r.budget.primes) CHECK(next.primes.count(p) == 1);
            CHECK(next.primes.count(r.witness.prime) == 1);
        }
        // Odd witness primes survive reduction into the denominators.
        if (r.witness.prime != 2) {
            auto support = matrix_prime_support(r.reflection);
            CHECK(support.count(r.witness.prime) == 1);
        }
    }
}

TEST_CASE("prime support cannot escape a budget under ring operations") {
    testsupport::Rng rng(72);
    for (int trial = 0; trial < 60; ++trial) {
        ExactMatrix x = testsupport::random_rational_matrix(rng, 3, 8);
        ExactMatrix y = testsupport::random_rational_matrix(rng, 3, 8);
        std::set<Int> budget = matrix_prime_support(x);
        auto ys = matrix_prime_support(y);
        budget.insert(ys.begin(), ys.end());
        // Words in x and y built from +, -, *: support stays inside.
        ExactMatrix w1 = mat_mul(x, y);
        ExactMatrix w2 = mat_mul(w1, x) - y;
        ExactMatrix w3 = mat_mul(w2, w1);
        for (const ExactMatrix* w : {&w1, &w2, &w3})
            for (const Int& p : matrix_prime_support(*w)) CHECK(budget.count(p) == 1);
    }
}
