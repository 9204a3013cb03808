#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "parhom/automorphism.hpp"
#include "parhom/corpus.hpp"
#include "parhom/errors.hpp"

using namespace parhom;

namespace {

bool fixes_setwise(const Permutation& p, const std::vector<int>& s) {
    std::vector<int> image;
    for (int v : s) image.push_back(p[static_cast<std::size_t>(v)]);
    std::sort(image.begin(), image.end());
    return image == s;
}

}  // namespace

TEST_CASE("automorphism groups of small graphs") {
    CHECK(automorphisms(Graph(1)).size() == 1);
    CHECK(automorphisms(cycle_graph(3)).size() == 6);
    auto threefold = automorphisms(threefold_nine_cycle());
    CHECK(threefold.size() == 3);
    for (auto& p : threefold) CHECK(is_automorphism(threefold_nine_cycle(), p));
    CHECK(automorphisms(Graph(0)).size() == 1);
    CHECK_THROWS_AS(automorphisms(path_graph(40)), BudgetError);
}

TEST_CASE("automorphisms agree with permutation enumeration") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = trial % 2 ? random_cactus(1 + trial % 8, rng) : random_graph(1 + trial % 8, 0.4, rng);
        auto ours = automorphisms(g);
        auto ref = oracle::automorphisms(g);
        std::sort(ours.begin(), ours.end());
        CHECK(ours == ref);
    }
}

TEST_CASE("find_involution basics") {
    auto k2 = find_involution(path_graph(2));
    REQUIRE(k2);
    CHECK(*k2 == Permutation{1, 0});
    const int fixed[] = {0};
    CHECK_FALSE(find_involution(path_graph(2), fixed));
    CHECK_FALSE(find_involution(threefold_nine_cycle()));
    CHECK_FALSE(find_involution(Graph(1)));
}

TEST_CASE("find_involution returns the lexicographically least involution") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = trial % 3 ? random_cactus(2 + trial % 7, rng) : random_graph(2 + trial % 7, 0.4, rng);
        std::optional<Permutation> least;
        for (auto& p : oracle::automorphisms(g)) {
            bool identity = true, order_two = true;
            for (std::size_t v = 0; v < p.size(); ++v) {
                identity &= p[v] == static_cast<int>(v);
                order_two &= p[p[v]] == static_cast<int>(v);
            }
            if (!identity && order_two && (!least || p < *least)) least = p;
        }
        auto ours = find_involution(g);
        CHECK(ours == least);
        if (ours) CHECK(is_involution(g, *ours));
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto seeded = find_involution(g, {}, seed);
            CHECK(seeded.has_value() == least.has_value());
            if (seeded) CHECK(is_involution(g, *seeded));
        }
    }
}

TEST_CASE("rooted cacti with symmetry have a rooted involution") {
    std::mt19937_64 rng(37);
    int exercised = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_cactus(3 + trial % 8, rng);
        for (int x = 0; x < g.order(); ++x) {
            const int root[] = {x};
            if (!has_nontrivial_automorphism(g, root)) continue;
            ++exercised;
            auto inv = find_involution(g, root);
            REQUIRE(inv);
            CHECK((*inv)[static_cast<std::size_t>(x)] == x);
        }
    }
    CHECK(exercised > 50);
}

TEST_CASE("fixed_subgraph") {
    auto p3 = fixed_subgraph(path_graph(3), Permutation{2, 1, 0});
    CHECK(p3.graph.order() == 1);
    CHECK(p3.to_host == std::vector<int>{1});
    CHECK(fixed_subgraph(path_graph(2), Permutation{1, 0}).graph.order() == 0);
    Permutation rot(6);
    for (int v = 0; v < 6; ++v) rot[static_cast<std::size_t>(v)] = (v + 3) % 6;
    CHECK(is_involution(cycle_graph(6), rot));
    CHECK(fixed_subgraph(cycle_graph(6), rot).graph.order() == 0);
}

TEST_CASE("involution-free reduction examples") {
    auto p3 = involution_free_reduction(path_graph(3));
    CHECK(p3.final_graph.order() == 1);
    CHECK(p3.steps.size() == 1);
    CHECK(p3.final_to_original == std::vector<int>{1});

    auto twelve = involution_free_reduction(fourfold_twelve_cycle());
    CHECK(twelve.final_graph.order() == 0);

    auto spider = involution_free_reduction(spider_tree());
    CHECK(spider.steps.empty());
    CHECK(spider.final_graph == spider_tree());
    CHECK_FALSE(oracle::has_involution(spider_tree()));
}

TEST_CASE("reduction traces are internally consistent") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_cactus(2 + trial % 11, rng);
        auto trace = involution_free_reduction(g);
        for (auto& step : trace.steps) {
            CHECK(is_involution(step.graph, step.involution));
            CHECK(step.fixed.graph == fixed_subgraph(step.graph, step.involution).graph);
        }
        CHECK_FALSE(find_involution(trace.final_graph));
        auto back = induced_subgraph(g, trace.final_to_original);
        CHECK(back.graph == trace.final_graph);
    }
}

TEST_CASE("different involution orders reach isomorphic reductions") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_cactus(4 + trial % 9, rng);
        auto base = involution_free_reduction(g).final_graph;
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            auto other = involution_free_reduction(g, seed * 1000 + static_cast<std::uint64_t>(trial)).final_graph;
            CHECK(are_isomorphic(base, other));
            if (base.order() <= 8) CHECK(oracle::isomorphic(base, other));
        }
    }
}

TEST_CASE("orbits") {
    auto asym = orbits(spider_tree());
    CHECK(asym.size() == 7);
    auto c5 = orbits(cycle_graph(5));
    REQUIRE(c5.size() == 1);
    CHECK(c5.front().size() == 5);
    for (auto& o : orbits(threefold_nine_cycle())) CHECK(o.size() == 3);
}

TEST_CASE("orbits agree with the enumerated group") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = trial % 2 ? random_cactus(2 + trial % 7, rng) : random_graph(2 + trial % 7, 0.4, rng);
        std::vector<std::set<int>> ref(static_cast<std::size_t>(g.order()));
        for (auto& p : oracle::automorphisms(g))
            for (int v = 0; v < g.order(); ++v) ref[static_cast<std::size_t>(v)].insert(p[static_cast<std::size_t>(v)]);
        auto idx = orbit_index(g);
        for (int v = 0; v < g.order(); ++v)
            for (int w = 0; w < g.order(); ++w)
                CHECK((idx[static_cast<std::size_t>(v)] == idx[static_cast<std::size_t>(w)]) ==
                      (ref[static_cast<std::size_t>(v)].count(w) == 1));
    }
}

TEST_CASE("aut_parity") {
    CHECK(aut_parity(threefold_nine_cycle()));
    CHECK_FALSE(aut_parity(path_graph(2)));
    CHECK(aut_parity(Graph(1)));
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_cactus(1 + trial % 9, rng);
        CHECK(aut_parity(g) == (automorphisms(g).size() % 2 == 1));
    }
}

TEST_CASE("orbit-preserving endomorphisms") {
    CHECK(orbit_preserving_endomorphisms(Graph(1)) == std::vector<std::vector<int>>{{0}});
    auto c4 = orbit_preserving_endomorphisms(cycle_graph(4));
    CHECK(c4.size() > automorphisms(cycle_graph(4)).size());
    CHECK(std::find(c4.begin(), c4.end(), std::vector<int>{0, 1, 0, 1}) != c4.end());
    CHECK_THROWS_AS(orbit_preserving_endomorphisms(path_graph(10)), BudgetError);
    for (int n = 1; n <= 7; ++n)
        for (auto& g : all_cacti(n)) {
            if (find_involution(g)) continue;
            auto endo = orbit_preserving_endomorphisms(g);
            auto aut = automorphisms(g);
            std::sort(aut.begin(), aut.end());
            CHECK(endo == aut);
        }
}

TEST_CASE("center structure") {
    auto odd = center_structure(path_graph(4));
    CHECK(odd.kind == CenterKind::edge);
    CHECK(odd.vertices == std::vector<int>{1, 2});
    auto c5 = center_structure(cycle_graph(5));
    CHECK(c5.kind == CenterKind::cycle);
    CHECK(c5.vertices.size() == 5);
    auto bowtie = center_structure(oracle::make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
    CHECK(bowtie.kind == CenterKind::vertex);
    CHECK(bowtie.vertices == std::vector<int>{2});
    CHECK_THROWS_AS(center_structure(complete_graph(4)), PreconditionError);
}

TEST_CASE("center structure is fixed by every automorphism") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = random_cactus(1 + trial % 12, rng);
        auto c = center_structure(g);
        auto sub = induced_subgraph(g, c.vertices);
        if (c.kind == CenterKind::vertex) CHECK(c.vertices.size() == 1);
        if (c.kind == CenterKind::edge) CHECK(sub.graph.size() == 1);
        if (c.kind == CenterKind::cycle) CHECK(sub.graph.size() == c.vertices.size());
        for (auto& p : automorphisms(g)) CHECK(fixes_setwise(p, c.vertices));
    }
}

TEST_CASE("fixed cycle of an involution-free symmetric cactus") {
    auto h = threefold_nine_cycle();
    auto c = fixed_cycle(h);
    REQUIRE(c);
    CHECK(c->size() == 9);
    auto idx = orbit_index(h);
    for (std::size_t k = 0; k < c->size(); ++k) {
        int a = (*c)[k], b = (*c)[(k + 2) % c->size()];
        CHECK(idx[static_cast<std::size_t>(a)] != idx[static_cast<std::size_t>(b)]);
    }
    CHECK_FALSE(fixed_cycle(spider_tree()));
    CHECK_THROWS_AS(fixed_cycle(cycle_graph(4)), PreconditionError);
}

TEST_CASE("isomorphism search") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_cactus(1 + trial % 12, rng);
        auto perm = random_permutation(g.order(), rng);
        auto h = relabel(g, perm);
        auto iso = find_isomorphism(g, h);
        REQUIRE(iso);
        CHECK(relabel(g, *iso) == h);
    }
    CHECK_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
    CHECK_FALSE(are_isomorphic(square_cactus_hard_a(), square_cactus_easy()));
}
