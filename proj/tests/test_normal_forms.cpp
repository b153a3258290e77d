#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace csl;
using testsupport::fe;

namespace {

// HNF shape: lower triangular, positive diagonal, row entries left of the
// diagonal reduced into [0, h_ii); columns past the row count zero.
void check_hnf_shape(const IntMatrix& h) {
    for (std::size_t i = 0; i < h.rows(); ++i) {
        REQUIRE(h.at(i, i) > 0);
        for (std::size_t j = 0; j < h.cols(); ++j) {
            if (j > i) REQUIRE(h.at(i, j) == 0);
            if (j < i) {
                REQUIRE(h.at(i, j) >= 0);
                REQUIRE(h.at(i, j) < h.at(i, i));
            }
        }
    }
}

} // namespace

TEST_CASE("hnf on fixed inputs") {
    CHECK(hnf(IntMatrix::identity(3)).h == IntMatrix::identity(3));
    CHECK(hnf(IntMatrix::identity(3)).u == IntMatrix::identity(3));

    IntMatrix m{{2, 1}, {0, 1}};
    HnfResult r = hnf(m);
    CHECK(r.h == IntMatrix{{1, 0}, {1, 2}});
    CHECK(mat_mul(m, r.u) == r.h);
    CHECK(abs_of(int_determinant(r.u)) == 1);

    IntMatrix diag{{4, 0}, {0, 6}};
    CHECK(hnf(diag).h == diag);

    CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), rank_deficient);
}

TEST_CASE("snf on fixed inputs") {
    CHECK(snf(IntMatrix::identity(2)) == std::vector<Int>{1, 1});
    CHECK(snf(IntMatrix{{2, 0}, {0, 4}}) == std::vector<Int>{2, 4});
    CHECK(snf(IntMatrix{{2, 1}, {0, 3}}) == std::vector<Int>{1, 6});
}

TEST_CASE("normal form contracts on random matrices") {
    testsupport::Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        IntMatrix m = testsupport::random_full_rank_int_matrix(rng, n, 20);
        HnfResult r = hnf(m);
        CHECK(mat_mul(m, r.u) == r.h);
        CHECK(abs_of(int_determinant(r.u)) == 1);
        check_hnf_shape(r.h);
        CHECK(abs_of(int_determinant(r.h)) == abs_of(int_determinant(m)));

        std::vector<Int> d = snf(m);
        REQUIRE(d.size() == n);
        Int prod = 1;
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d[i] > 0);
            if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
            prod *= d[i];
        }
        CHECK(prod == abs_of(int_determinant(m)));
    }
}

TEST_CASE("hnf of rectangular full-row-rank blocks") {
    testsupport::Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        IntMatrix m = IntMatrix::zero(n, 2 * n);
        IntMatrix left = testsupport::random_full_rank_int_matrix(rng, n, 9);
        IntMatrix right = testsupport::random_int_matrix(rng, n, n, 9);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = left.at(i, j);
                m.at(i, n + j) = right.at(i, j);
            }
        HnfResult r = hnf(m);
        CHECK(mat_mul(m, r.u) == r.h);
        CHECK(abs_of(int_determinant(r.u)) == 1);
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(r.h.at(i, i) > 0);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j > i) REQUIRE(r.h.at(i, j) == 0);
                if (j < i) {
                    REQUIRE(r.h.at(i, j) >= 0);
                    REQUIRE(r.h.at(i, j) < r.h.at(i, i));
                }
            }
        }
    }
}

TEST_CASE("lattice intersection on fixed inputs") {
    SECTION("identity") {
        SublatticeBasis b = intersect_with_rational_image(ExactMatrix::identity(3));
        CHECK(b.index == 1);
        CHECK(b.c == IntMatrix::identity(3));
    }
    SECTION("paper conjugate has index 21") {
        SublatticeBasis b = intersect_with_rational_image(testsupport::example41_conjugate());
        CHECK(b.index == 21);
    }
    SECTION("rational rotation has index 5") {
        ExactMatrix rot{{fe(3, 5), fe(-4, 5)}, {fe(4, 5), fe(3, 5)}};
        CHECK(intersect_with_rational_image(rot).index == 5);
    }
    SECTION("rejects surd entries and singular input") {
        CHECK_THROWS_AS(intersect_with_rational_image(testsupport::example41_isometry()),
                        irrational_entries);
        CHECK_THROWS_AS(intersect_with_rational_image(ExactMatrix{{fe(1), fe(1)}, {fe(1), fe(1)}}),
                        singular_matrix);
    }
}

TEST_CASE("residue count oracle on fixed inputs") {
    CHECK(residue_count_index(ExactMatrix::identity(2), 1) == 1);
    ExactMatrix rot{{fe(3, 5), fe(-4, 5)}, {fe(4, 5), fe(3, 5)}};
    CHECK(residue_count_index(rot, 5) == 5);
    ExactMatrix twice{{fe(2), fe(0)}, {fe(0), fe(2)}};
    CHECK(residue_count_index(twice, 2) == 4);
    CHECK_THROWS_AS(residue_count_index(rot, 3), invalid_clearing_multiple);
}

TEST_CASE("intersection basis containments") {
    testsupport::Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        ExactMatrix m = testsupport::random_invertible_rational_matrix(rng, n, 4);
        SublatticeBasis b = intersect_with_rational_image(m);
        CHECK(b.index == abs_of(int_determinant(b.c)));
        ExactMatrix c_exact = to_exact(b.c);
        // Columns lie in M Z^n: M^{-1} C integral.
        ExactMatrix inv_c = mat_mul(inverse(m), c_exact);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(is_integer(inv_c.at(i, j).as_rational()));
        // q e_i is an integer combination of the columns for the clearing
        // multiple q of M^{-1}.
        Int q = clear_denominators(inverse(m)).second;
        ExactMatrix comb = scalar_mul(FieldElement(Rational(q)), inverse(c_exact));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(is_integer(comb.at(i, j).as_rational()));
    }
}

TEST_CASE("dual-sum index equals residue-count oracle") {
    testsupport::Rng rng(32);
    int done = 0;
    while (done < 60) {
        std::size_t n = 2 + static_cast<std::size_t>(done % 2);
        // Small denominators keep the clearing multiple enumerable.
        std::vector<FieldElement> entries;
        std::uniform_int_distribution<int> num(-3, 3);
        std::uniform_int_distribution<int> den(1, 3);
        for (std::size_t k = 0; k < n * n; ++k)
            entries.push_back(fe(num(rng), den(rng)));
        ExactMatrix m(n, n, std::move(entries));
        if (determinant(m).is_zero()) continue;
        Int q = lcm_of(clear_denominators(m).second, clear_denominators(inverse(m)).second);
        if (q > 10) continue;
        CHECK(intersect_with_rational_image(m).index == residue_count_index(m, q));
        ++done;
    }
}

TEST_CASE("index is invariant under unimodular column change") {
    testsupport::Rng rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        ExactMatrix m = testsupport::random_invertible_rational_matrix(rng, n, 4);
        IntMatrix u = testsupport::random_unimodular(rng, n);
        ExactMatrix mu = mat_mul(m, to_exact(u));
        CHECK(intersect_with_rational_image(m).index ==
              intersect_with_rational_image(mu).index);
    }
}
