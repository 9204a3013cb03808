#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parhom/corpus.hpp"
#include "parhom/errors.hpp"
#include "parhom/graph.hpp"

using namespace parhom;

TEST_CASE("parse_graph reads small edge lists") {
    auto k2 = parse_graph("2 1\n0 1\n");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.adjacent(0, 1));

    auto k1 = parse_graph("1 0");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    auto c3 = parse_graph("3 3\n0 1\n1 2\n2 0");
    CHECK(c3.size() == 3);
    for (int v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);
}

TEST_CASE("parse_graph collapses duplicate edges") {
    auto g = parse_graph("3 3\n0 1\n1 0\n1 2\n");
    CHECK(g.size() == 2);
}

TEST_CASE("parse_graph names the offending line") {
    auto line_of = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
    CHECK(line_of("3 2\n0 1\n1 7\n") == 3);
    CHECK(line_of("3 2\n0 x\n1 2\n") == 2);
    CHECK(line_of("3\n") == 1);
    CHECK(line_of("") == 1);
}

TEST_CASE("serialize_graph round-trips and sorts edges") {
    auto g = parse_graph("4 3\n3 2\n1 0\n2 0\n");
    CHECK(serialize_graph(g) == "4 3\n0 1\n0 2\n2 3\n");
    CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("dot export marks the root") {
    auto dot = to_dot(path_graph(2), 1);
    CHECK(dot.find("1 [shape=doublecircle]") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("degree sum is twice the edge count") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(9, 0.4, rng);
        std::size_t sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += static_cast<std::size_t>(g.degree(v));
        CHECK(sum == 2 * g.size());
    }
}

TEST_CASE("is_cactus on small shapes") {
    CHECK(is_cactus(cycle_graph(3)));
    CHECK_FALSE(is_cactus(complete_graph(4)));
    CHECK(is_cactus(threefold_nine_cycle()));
    CHECK(is_cactus(square_cactus_hard_a()));
    auto v = cactus_violation(complete_graph(4));
    REQUIRE(v.has_value());
    CHECK(oracle::detours(complete_graph(4), v->first, v->second) > 1);
}

TEST_CASE("is_cactus agrees with cycle enumeration on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + trial % 6;
        auto g = random_graph(n, 0.25 + 0.05 * (trial % 5), rng);
        CHECK(is_cactus(g) == oracle::is_cactus(g));
    }
}

TEST_CASE("blocks of a path, a square and a bowtie") {
    auto p3 = blocks(path_graph(3));
    CHECK(p3.blocks.size() == 2);
    CHECK(p3.cut_vertices == std::vector<int>{1});

    auto c4 = blocks(cycle_graph(4));
    CHECK(c4.blocks.size() == 1);
    CHECK(c4.cut_vertices.empty());

    auto bowtie = oracle::make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto bd = blocks(bowtie);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == oracle::cut_vertices(bowtie));
    CHECK(bd.cut_vertices == std::vector<int>{2});
}

TEST_CASE("blocks partition the edges and match articulation oracle") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(4 + trial % 7, 0.3, rng);
        auto bd = blocks(g);
        std::vector<Edge> all;
        for (auto& be : bd.block_edges) all.insert(all.end(), be.begin(), be.end());
        std::sort(all.begin(), all.end());
        CHECK(all == g.edges());
        CHECK(bd.cut_vertices == oracle::cut_vertices(g));
        CHECK(bd.block_cut_tree.order() == static_cast<int>(bd.blocks.size() + bd.cut_vertices.size()));
    }
}

TEST_CASE("cycles are listed in canonical rotation") {
    auto c = cycles(cycle_graph(5));
    REQUIRE(c.size() == 1);
    CHECK(c.front() == std::vector<int>{0, 1, 2, 3, 4});
    auto h = threefold_nine_cycle();
    REQUIRE(cycles(h).size() == 1);
    CHECK(cycles(h).front().size() == 9);
    CHECK(cycles(square_cactus_easy()).size() == 4);
}

TEST_CASE("split_at reassembles the graph") {
    auto p3 = split_at(path_graph(3), 1);
    CHECK(p3.components.size() == 2);
    for (auto& c : p3.components) CHECK(c.graph.size() == 1);

    auto star = split_at(star_graph(3), 0);
    CHECK(star.components.size() == 3);

    auto bowtie = oracle::make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto s = split_at(bowtie, 2);
    REQUIRE(s.components.size() == 2);
    for (auto& c : s.components) CHECK(c.graph == cycle_graph(3));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_cactus(10, rng);
        for (int v : blocks(g).cut_vertices) {
            auto sp = split_at(g, v);
            std::vector<Edge> edges;
            for (auto& c : sp.components) {
                CHECK(c.local(v) >= 0);
                CHECK(is_connected(c.graph));
                for (auto [a, b] : c.graph.edges()) edges.emplace_back(c.to_host[a], c.to_host[b]);
            }
            std::sort(edges.begin(), edges.end());
            CHECK(edges == g.edges());
            for (std::size_t i = 0; i < sp.components.size(); ++i)
                for (std::size_t j = i + 1; j < sp.components.size(); ++j) {
                    std::vector<int> common;
                    std::set_intersection(sp.components[i].to_host.begin(), sp.components[i].to_host.end(),
                                          sp.components[j].to_host.begin(), sp.components[j].to_host.end(),
                                          std::back_inserter(common));
                    CHECK(common == std::vector<int>{v});
                }
        }
    }
    CHECK_THROWS_AS(split_at(cycle_graph(4), 0), PreconditionError);
}

TEST_CASE("unique_shortest_path distinguishes ties and disconnection") {
    CHECK(std::holds_alternative<NotUnique>(unique_shortest_path(cycle_graph(4), 0, 2)));
    auto c5 = unique_shortest_path(cycle_graph(5), 0, 2);
    REQUIRE(std::holds_alternative<Path>(c5));
    CHECK(std::get<Path>(c5).vertices == std::vector<int>{0, 1, 2});
    CHECK(std::holds_alternative<Unreachable>(unique_shortest_path(Graph(2), 0, 1)));
    auto t = unique_path(spider_tree(), 3, 6);
    REQUIRE(t);
    CHECK(t->vertices == std::vector<int>{3, 2, 0, 4, 5, 6});
}

TEST_CASE("unique_shortest_path agrees with path enumeration") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_cactus(9, rng);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) {
                auto all = oracle::shortest_paths(g, u, v);
                auto r = unique_shortest_path(g, u, v);
                if (all.size() == 1) {
                    REQUIRE(std::holds_alternative<Path>(r));
                    CHECK(std::get<Path>(r).vertices == all.front());
                    CHECK(std::get<Path>(r).length() == distance(g, u, v));
                } else {
                    CHECK(std::holds_alternative<NotUnique>(r));
                }
            }
    }
}

TEST_CASE("distances") {
    CHECK(distance(cycle_graph(6), 2, 2) == 0);
    CHECK(distance(cycle_graph(6), 0, 3) == 3);
    CHECK(distance_to_set(cycle_graph(6), 0, {}) == kInfiniteDistance);
    const int targets[] = {3, 5};
    CHECK(distance_to_set(cycle_graph(6), 0, targets) == 1);
    CHECK(distance(Graph(2), 0, 1) == kInfiniteDistance);
}

TEST_CASE("relabel and induced subgraph") {
    auto g = path_graph(4);
    const int perm[] = {3, 2, 1, 0};
    CHECK(relabel(g, perm) == g);
    auto sub = induced_subgraph(cycle_graph(5), {4, 0, 1});
    CHECK(sub.to_host == std::vector<int>{0, 1, 4});
    CHECK(sub.graph.size() == 2);
    CHECK(sub.local(4) == 2);
    CHECK(sub.local(3) == -1);
}
