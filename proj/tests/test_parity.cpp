#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parhom/corpus.hpp"
#include "parhom/errors.hpp"
#include "parhom/parity.hpp"

using namespace parhom;

TEST_CASE("walk_parity on small graphs") {
    auto c3 = cycle_graph(3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(walk_parity(c3, u, v, 0) == (u == v));
    CHECK(walk_parity(c3, 0, 1, 2) == (oracle::walks(c3, 0, 1, 2) % 2 == 1));
    CHECK(walk_parity(c3, 0, 1, 2));
    CHECK_FALSE(walk_parity(cycle_graph(4), 0, 2, 2));
    CHECK(oracle::walks(cycle_graph(4), 0, 2, 2) == 2);
}

TEST_CASE("walk_count exact values") {
    CHECK(walk_count(path_graph(2), 0, 1, 3) == 1);
    CHECK(walk_count(cycle_graph(4), 0, 0, 2) == 2);
    CHECK(walk_count(star_graph(3), 0, 0, 2) == 3);
    CHECK_THROWS_AS(walk_count(path_graph(2), 0, 1, 65), BudgetError);
    CHECK(walk_count(path_graph(2), 0, 1, 101, 200) == 1);
}

TEST_CASE("walk counts agree with enumeration") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_graph(3 + trial % 5, 0.5, rng);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                for (int k = 0; k <= 6; ++k) CHECK(walk_count(g, u, v, k) == oracle::walks(g, u, v, k));
    }
}

TEST_CASE("walk_parity matches exact counts mod 2") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(1 + trial % 10, 0.35, rng);
        WalkParity wp(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                for (int k = 0; k <= 12; ++k) {
                    const bool exact = bit_test(walk_count(g, u, v, k), 0);
                    CHECK(wp(u, v, k) == exact);
                    CHECK(wp(u, v, k) == wp(v, u, k));
                }
    }
}

TEST_CASE("walk parities compose through a middle vertex") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_graph(7, 0.4, rng);
        WalkParity wp(g);
        for (int j = 0; j <= 4; ++j)
            for (int k = 0; k <= 4; ++k)
                for (int u = 0; u < g.order(); ++u)
                    for (int v = 0; v < g.order(); ++v) {
                        bool sum = false;
                        for (int m = 0; m < g.order(); ++m) sum ^= wp(u, m, j) && wp(m, v, k);
                        CHECK(sum == wp(u, v, j + k));
                    }
    }
}

TEST_CASE("matrix powers are cached consistently") {
    auto g = threefold_nine_cycle();
    WalkParity wp(g);
    auto a = GF2Matrix::adjacency(g);
    GF2Matrix p = GF2Matrix::identity(g.order());
    for (int k = 0; k <= 40; ++k) {
        CHECK(wp.power(k) == p);
        p = p * a;
    }
    CHECK(wp.power(17) == wp.power(17));
}

TEST_CASE("GF2Matrix handles more than one word per row") {
    auto g = cycle_graph(130);
    WalkParity wp(g);
    CHECK(wp(0, 65, 65) == bit_test(walk_count(g, 0, 65, 65, 70), 0));
    CHECK(wp(0, 129, 1));
}

TEST_CASE("degree parity") {
    CHECK(degree_parity(path_graph(2), 0));
    CHECK_FALSE(degree_parity(cycle_graph(4), 0));
    // A cycle vertex carrying a pendant path has degree 3.
    CHECK(degree_parity(threefold_nine_cycle(), 2));
}
