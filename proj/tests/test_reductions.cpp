#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parhom/corpus.hpp"
#include "parhom/errors.hpp"
#include "parhom/reductions.hpp"

using namespace parhom;

namespace {

std::vector<std::vector<int>> pin_domains(const ReductionInstance& r) {
    return r.pin.domains(r.graph.order(), r.host.order());
}

// Spider gadget written out by hand: hub 5 with leaf 6 as the outer set,
// selector 4, target the centre 0 and no cancelled vertices.
HardnessGadget hand_spider_gadget() {
    HardnessGadget g;
    g.beta = 2;
    g.hub = 5;
    g.selector = 4;
    g.target = 0;
    g.outs = {6};
    return g;
}

}  // namespace

TEST_CASE("empty source graph leaves the host copy") {
    auto h = threefold_nine_cycle();
    auto g = find_hardness_gadget(h);
    auto r = build_g_gamma(Graph(0), h, g);
    CHECK(r.graph == h);
    auto orb = orbits(h);
    for (const auto& o : orb)
        for (int v : o) CHECK(r.pin.entries().at(v) == o);
    CHECK(r.pin.entries().size() == static_cast<std::size_t>(h.order()));
}

TEST_CASE("single source vertex") {
    auto h = threefold_nine_cycle();
    auto g = find_hardness_gadget(h);
    auto r = build_g_gamma(Graph(1), h, g);
    const int x = h.order();
    CHECK(r.roles[static_cast<std::size_t>(x)] == VertexRole{VertexRoleKind::source, 0});
    CHECK(r.graph.adjacent(x, g.hub));
    std::size_t internals = 0;
    for (int u : g.cancelled) {
        internals += static_cast<std::size_t>(g.walk_length.at(u) - 1);
        CHECK(oracle::distances(r.graph, x)[g.anchor.at(u)] <= g.walk_length.at(u));
    }
    CHECK(static_cast<std::size_t>(r.graph.order()) == static_cast<std::size_t>(h.order()) + 1 + internals);
    CHECK(r.graph.size() == h.size() + 1 + internals + g.cancelled.size() -
                                (g.cancelled.size() && g.walk_length.at(g.cancelled[0]) == 1 &&
                                         g.anchor.at(g.cancelled[0]) == g.hub
                                     ? 1
                                     : 0));
}

TEST_CASE("vertex numbering and size identity") {
    auto h = spider_tree();
    auto g = hand_spider_gadget();
    REQUIRE(verify_hardness_gadget(h, g).ok());
    auto r = build_g_gamma(path_graph(2), h, g);
    // 7 host, 2 source, 1 edge vertex, 1 internal on the target path.
    CHECK(r.graph.order() == 11);
    CHECK(expected_order(path_graph(2), h, g) == 11);
    std::vector<VertexRole> roles = {
        {VertexRoleKind::host, 0},   {VertexRoleKind::host, 1},   {VertexRoleKind::host, 2},
        {VertexRoleKind::host, 3},   {VertexRoleKind::host, 4},   {VertexRoleKind::host, 5},
        {VertexRoleKind::host, 6},   {VertexRoleKind::source, 0}, {VertexRoleKind::source, 1},
        {VertexRoleKind::edge, 0},   {VertexRoleKind::path_internal, 0}};
    CHECK(r.roles == roles);
    std::vector<Edge> extra = {{5, 7}, {5, 8}, {7, 9}, {8, 9}, {0, 10}, {9, 10}};
    auto edges = h.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    CHECK(r.graph == Graph::from_edges(11, edges));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto src = random_graph(1 + trial % 6, 0.5, rng);
        for (const auto& host : {spider_tree(), threefold_nine_cycle()}) {
            auto gad = find_hardness_gadget(host);
            auto inst = build_g_gamma(src, host, gad);
            std::size_t anchors = 0;
            for (int u : gad.cancelled) anchors += static_cast<std::size_t>(gad.walk_length.at(u) - 1);
            std::size_t n = static_cast<std::size_t>(src.order()), m = src.size();
            CHECK(static_cast<std::size_t>(inst.graph.order()) ==
                  n + static_cast<std::size_t>(host.order()) + m + m * static_cast<std::size_t>(gad.beta - 1) + n * anchors);
            CHECK(inst.roles.size() == static_cast<std::size_t>(inst.graph.order()));
        }
    }
}

TEST_CASE("unverified gadgets are rejected") {
    auto h = spider_tree();
    auto g = hand_spider_gadget();
    g.outs = {6, 4};
    CHECK_THROWS_AS(build_g_gamma(path_graph(2), h, g), PreconditionError);
    CHECK_THROWS_AS(verify_reduction(path_graph(2), h, g), PreconditionError);
}

TEST_CASE("reduction congruence against independent counts") {
    std::vector<Graph> sources = {Graph(1), path_graph(2), path_graph(3), cycle_graph(3), path_graph(4)};
    for (const auto& host : {spider_tree(), threefold_nine_cycle()}) {
        auto gad = find_hardness_gadget(host);
        for (const auto& src : sources) {
            auto check = verify_reduction(src, host, gad);
            CHECK(check.ok());
            CHECK(check.source_parity == oracle::z_parity(src, 1, gad.outs.size()));
            auto inst = build_g_gamma(src, host, gad);
            CHECK(check.pinned_parity == (oracle::homs_backtrack(inst.graph, host, pin_domains(inst)) % 2 == 1));
        }
    }
    // Edge-free sources with several vertices.
    auto gad = find_hardness_gadget(spider_tree());
    for (int n = 0; n <= 4; ++n) CHECK(verify_reduction(Graph(n), spider_tree(), gad).ok());
}

TEST_CASE("reduction congruence on random sources") {
    std::mt19937_64 rng(8);
    auto host = spider_tree();
    auto gad = hand_spider_gadget();
    for (int trial = 0; trial < 25; ++trial) {
        auto src = random_graph(2 + trial % 5, 0.4, rng);
        auto check = verify_reduction(src, host, gad);
        CHECK(check.ok());
        CHECK(check.source_parity == oracle::z_parity(src, 1, 1));
    }
}

TEST_CASE("pinned homomorphisms restrict to automorphisms") {
    auto threefold = threefold_nine_cycle();
    auto r = build_g_gamma(Graph(1), threefold, find_hardness_gadget(threefold));
    auto report = aut_factor_check(threefold, r);
    CHECK(report.ok());
    CHECK(report.automorphism_count == 3);
    REQUIRE(report.bucket_sizes.size() == 3);
    CHECK(report.bucket_sizes[0] == report.bucket_sizes[1]);
    CHECK(report.stray_restrictions.empty());
    // Bucket total is the pinned count.
    BigNat total = 0;
    for (const auto& b : report.bucket_sizes) total += b;
    CHECK(total == BigNat(oracle::homs_backtrack(r.graph, threefold, pin_domains(r))));

    auto spider = spider_tree();
    auto rs = build_g_gamma(path_graph(2), spider, hand_spider_gadget());
    auto single = aut_factor_check(spider, rs);
    CHECK(single.ok());
    CHECK(single.bucket_sizes.size() == 1);

    CHECK_THROWS_AS(aut_factor_check(threefold, rs), PreconditionError);
}

TEST_CASE("classification of the reference graphs") {
    CHECK(classify(square_cactus_hard_a()).verdict == Verdict::parity_p_complete);
    CHECK(classify(square_cactus_easy()).verdict == Verdict::polynomial_time);
    CHECK(classify(square_cactus_hard_b()).verdict == Verdict::parity_p_complete);
    auto threefold = classify(threefold_nine_cycle());
    CHECK(threefold.verdict == Verdict::parity_p_complete);
    REQUIRE(threefold.witness);
    auto comp = induced_subgraph(threefold_nine_cycle(), threefold.witness_component);
    std::vector<int> to_local(18, -1);
    for (int v = 0; v < comp.graph.order(); ++v) to_local[comp.to_host[v]] = v;
    auto local = map_gadget(*threefold.witness, to_local);
    CHECK(oracle::is_gadget(comp.graph, local));

    auto fourfold = classify(fourfold_twelve_cycle());
    CHECK(fourfold.verdict == Verdict::polynomial_time);
    CHECK(fourfold.reduction.final_graph.order() == 0);
    CHECK_FALSE(fourfold.witness);
}

TEST_CASE("classification of small cases") {
    CHECK(classify(path_graph(2)).verdict == Verdict::polynomial_time);
    CHECK(classify(Graph(1)).verdict == Verdict::polynomial_time);
    CHECK(classify(Graph(0)).verdict == Verdict::polynomial_time);
    CHECK(classify(cycle_graph(5)).verdict == Verdict::polynomial_time);
    CHECK(classify(spider_tree()).verdict == Verdict::parity_p_complete);
    CHECK_THROWS_AS(classify(complete_graph(4)), PreconditionError);

    // Disconnected inputs: an extra isolated vertex keeps the spider hard, a
    // second spider makes the pair swappable.
    std::vector<Edge> edges = spider_tree().edges();
    auto plus_point = Graph::from_edges(8, edges);
    auto c = classify(plus_point);
    CHECK(c.verdict == Verdict::parity_p_complete);
    CHECK(c.witness_component.size() == 7);
    for (auto [a, b] : spider_tree().edges()) edges.emplace_back(a + 7, b + 7);
    CHECK(classify(Graph::from_edges(14, edges)).verdict == Verdict::polynomial_time);
}

TEST_CASE("classification agrees with the reduced order") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& g : all_cacti(n)) {
            auto c = classify(g);
            bool hard = c.reduction.final_graph.order() > 1;
            CHECK((c.verdict == Verdict::parity_p_complete) == hard);
            if (hard) {
                REQUIRE(c.witness);
                auto comp = induced_subgraph(g, c.witness_component);
                std::vector<int> to_local(static_cast<std::size_t>(n), -1);
                for (int v = 0; v < comp.graph.order(); ++v) to_local[comp.to_host[v]] = v;
                CHECK(oracle::is_gadget(comp.graph, map_gadget(*c.witness, to_local)));
            }
        }
}

TEST_CASE("classification is invariant under relabeling") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_cactus(3 + trial % 12, rng, 6);
        auto perm = random_permutation(g.order(), rng);
        CHECK(classify(g).verdict == classify(relabel(g, perm)).verdict);
    }
}
