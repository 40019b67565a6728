#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "bnloci/bn_core.hpp"

using namespace bnloci;

TEST_CASE("rho evaluates the closed form exactly") {
    CHECK(rho(BNTriple(7, 2, 6)) == -2);
    CHECK(rho(BNTriple(23, 4, 22)) == -2);
    CHECK(rho(BNTriple(23, 1, 12)) == -1);

    // rho(g, 0, d) = d, so (g, 0, 0) -> 0 for every genus.
    for (Int g = 2; g <= 50; ++g) {
        CHECK(rho(BNTriple(g, 0, 0)) == 0);
        CHECK(rho(g, 0, 17) == 17);
    }
}

TEST_CASE("BNTriple validates its invariants and the input guard") {
    CHECK_THROWS_AS(BNTriple(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BNTriple(5, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(BNTriple(5, 0, -1), std::invalid_argument);
    CHECK_THROWS_AS(BNTriple(input_guard() + 1, 1, 2), std::out_of_range);

    // Raw arithmetic overflow also signals input out of range.
    CHECK_THROWS_AS(rho(INT64_MAX / 2, INT64_MAX / 2, 3), std::overflow_error);
}

TEST_CASE("rho_pflueger scans the whole correction range") {
    CHECK(rho_pflueger(BNTriple(8, 2, 7), 4) == 0);
    CHECK(rho_pflueger(BNTriple(12, 2, 9), 5) == -1);

    SECTION("an l-range forced to {0} returns plain rho") {
        // r = 0 forces min{r, g-d+r+1} = 0.
        const BNTriple t(20, 0, 5);
        CHECK(rho_pflueger(t, 3) == rho(t));
    }

    SECTION("rho_k >= rho always, and k < 2 is rejected") {
        CHECK_THROWS_AS(rho_pflueger(BNTriple(8, 2, 7), 1), std::invalid_argument);
        std::mt19937_64 rng(20240817);
        for (int i = 0; i < 2000; ++i) {
            const Int g = 2 + static_cast<Int>(rng() % 80);
            const Int r = static_cast<Int>(rng() % 8);
            const Int d = static_cast<Int>(rng() % (2 * g));
            const Int k = 2 + static_cast<Int>(rng() % (g / 2 + 2));
            const BNTriple t(g, r, d);
            CHECK(rho_pflueger(t, k) >= rho(t));
        }
    }
}

TEST_CASE("discriminant of the attached rank-2 lattice") {
    CHECK(discriminant(BNTriple(9, 2, 6)) == -4);
    CHECK(discriminant(BNTriple(14, 3, 13)) == -65);

    // r = 1 kills the first term.
    for (Int g = 2; g <= 40; ++g)
        for (Int d = 0; d <= g; ++d) CHECK(discriminant(g, 1, d) == -d * d);
}

TEST_CASE("d_max closed form and defining property") {
    CHECK(d_max(23, 1) == 12);
    CHECK(d_max(11, 2) == 9);
    CHECK_THROWS_AS(d_max(10, 0), std::invalid_argument);

    SECTION("exact division case (r+1) | gr") {
        for (Int r = 1; r <= 9; ++r)
            for (Int m = 1; m <= 12; ++m) {
                const Int g = m * (r + 1);  // then gr/(r+1) = m*r exactly
                CHECK(d_max(g, r) == r + (g * r) / (r + 1) - 1);
            }
    }

    SECTION("largest special degree, g <= 300") {
        for (Int g = 3; g <= 300; ++g)
            for (Int r = 1; r <= max_rank(g); ++r) {
                const Int d = d_max(g, r);
                REQUIRE(rho(g, r, d) < 0);
                REQUIRE(rho(g, r, d + 1) >= 0);
            }
    }
}

TEST_CASE("serre_dual") {
    CHECK(serre_dual(BNTriple(23, 4, 22)) == BNTriple(23, 4, 22));
    CHECK(serre_dual(BNTriple(8, 1, 4)) == BNTriple(8, 4, 10));
    CHECK_THROWS_AS(serre_dual(BNTriple(3, 0, 3)), std::domain_error);

    SECTION("involution and rho invariance") {
        // Both members of the dual pair must have non-negative rank and
        // degree: d <= g + r - 1 and d <= 2g - 2.
        for (Int g = 2; g <= 60; ++g)
            for (Int r = 0; r <= 8; ++r)
                for (Int d = 0; d <= std::min(g + r - 1, 2 * g - 2); ++d) {
                    const BNTriple t(g, r, d);
                    const BNTriple dual = serre_dual(t);
                    CHECK(serre_dual(dual) == t);
                    CHECK(rho(dual) == rho(t));
                }
    }
}

TEST_CASE("is_expected_maximal") {
    CHECK(is_expected_maximal(7, 2, 6));
    CHECK_FALSE(is_expected_maximal(11, 3, 11));  // d = 11 > g - 1

    // rho >= 0 is never expected maximal.
    for (Int g = 3; g <= 60; ++g)
        for (Int r = 0; r <= 6; ++r)
            for (Int d = 2; d <= g - 1; ++d)
                if (rho(g, r, d) >= 0) CHECK_FALSE(is_expected_maximal(g, r, d));
}

TEST_CASE("max_rank") {
    CHECK(max_rank(23) == 4);
    CHECK(max_rank(11) == 2);
    CHECK_THROWS_AS(max_rank(2), std::invalid_argument);

    // Boundary: g = n^2 + n gives exactly n.
    for (Int n = 2; n <= 40; ++n) CHECK(max_rank(n * n + n) == n);
}

TEST_CASE("expected_maximal_loci enumerates one locus per admissible rank") {
    auto as_set = [](const std::vector<ExpectedMaximalLocus>& loci) {
        std::set<std::pair<Int, Int>> s;
        for (const auto& em : loci) s.insert({em.triple.r, em.triple.d});
        return s;
    };

    CHECK(as_set(expected_maximal_loci(23)) ==
          std::set<std::pair<Int, Int>>{{1, 12}, {2, 17}, {3, 20}, {4, 22}});
    CHECK(as_set(expected_maximal_loci(11)) == std::set<std::pair<Int, Int>>{{1, 6}, {2, 9}});
    CHECK(as_set(expected_maximal_loci(7)).count({2, 6}) == 1);

    SECTION("every returned locus is expected maximal and satisfies g >= r^2 + r") {
        for (Int g = 3; g <= 300; ++g)
            for (const auto& em : expected_maximal_loci(g)) {
                REQUIRE(is_expected_maximal(em.triple));
                REQUIRE(em.rho == rho(em.triple));
                REQUIRE(em.rho < 0);
                REQUIRE(g >= em.triple.r * em.triple.r + em.triple.r);
            }
    }
}

TEST_CASE("classification completeness by brute force, g <= 120") {
    for (Int g = 3; g <= 120; ++g) {
        std::set<std::pair<Int, Int>> listed;
        for (const auto& em : expected_maximal_loci(g)) listed.insert({em.triple.r, em.triple.d});
        for (Int r = 1; r <= g; ++r)
            for (Int d = 2; d <= g - 1; ++d)
                REQUIRE(is_expected_maximal(g, r, d) == (listed.count({r, d}) == 1));
    }
}
