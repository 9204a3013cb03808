#include "parhom/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "parhom/automorphism.hpp"
#include "parhom/errors.hpp"

namespace parhom {

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, e);
}

Graph spider_tree() {
    const Edge e[] = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
    return Graph::from_edges(7, e);
}

namespace {

// Core vertices named by grid position: a4 a6 b2 b4 b6 c0 c2 c4 c6 d0 d2 d4 d6.
enum Square { a4, a6, b2, b4, b6, c0, c2, c4, c6, d0, d2, d4, d6, kCore };

Graph square_cactus(std::initializer_list<int> bristle_sites) {
    std::vector<Edge> e = {{a4, a6}, {a6, b6}, {b6, b4}, {b4, a4}, {b4, c4}, {c4, c2}, {c2, b2}, {b2, b4},
                           {c4, c6}, {c6, d6}, {d6, d4}, {d4, c4}, {c2, d2}, {d2, d0}, {d0, c0}, {c0, c2}};
    int next = kCore;
    for (int site : bristle_sites) e.emplace_back(site, next++);
    return Graph::from_edges(next, e);
}

Graph decorated_cycle(int length, const std::vector<int>& pendant_sites, const std::vector<int>& extended_sites) {
    std::vector<Edge> e;
    for (int v = 0; v < length; ++v) e.emplace_back(v, (v + 1) % length);
    int next = length;
    std::map<int, int> tip;
    for (int site : pendant_sites) {
        e.emplace_back(site, next);
        tip[site] = next++;
    }
    for (int site : extended_sites) e.emplace_back(tip.at(site), next++);
    return Graph::from_edges(next, e);
}

}  // namespace

Graph square_cactus_hard_a() { return square_cactus({c0, d4, a6, a4}); }
Graph square_cactus_easy() { return square_cactus({c0, d4, d6, a4}); }
Graph square_cactus_hard_b() { return square_cactus({c0, d4, d6, a6}); }

Graph threefold_nine_cycle() { return decorated_cycle(9, {1, 2, 4, 5, 7, 8}, {2, 5, 8}); }

Graph fourfold_twelve_cycle() { return decorated_cycle(12, {1, 2, 4, 5, 7, 8, 10, 11}, {2, 5, 8, 11}); }

std::vector<NamedGraph> named_graphs() {
    return {
        {"spider", spider_tree()},
        {"square-hard-a", square_cactus_hard_a()},
        {"square-easy", square_cactus_easy()},
        {"square-hard-b", square_cactus_hard_b()},
        {"nine-cycle-threefold", threefold_nine_cycle()},
        {"twelve-cycle-fourfold", fourfold_twelve_cycle()},
    };
}

Graph named_graph(const std::string& name) {
    for (auto& ng : named_graphs())
        if (ng.name == name) return ng.graph;
    throw PreconditionError("unknown graph name '" + name + "'");
}

namespace {

Graph attach_pendant(const Graph& g, int at) {
    auto e = g.edges();
    e.emplace_back(at, g.order());
    return Graph::from_edges(g.order() + 1, e);
}

Graph attach_cycle(const Graph& g, int at, int length) {
    auto e = g.edges();
    int prev = at;
    for (int k = 0; k + 1 < length; ++k) {
        e.emplace_back(prev, g.order() + k);
        prev = g.order() + k;
    }
    e.emplace_back(prev, at);
    return Graph::from_edges(g.order() + length - 1, e);
}

std::vector<int> invariant(const Graph& g) {
    std::vector<int> key;
    std::vector<int> deg;
    for (int v = 0; v < g.order(); ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    key = deg;
    key.push_back(-1);
    for (const auto& c : cycles(g)) key.push_back(static_cast<int>(c.size()));
    std::sort(key.begin() + static_cast<long>(deg.size()) + 1, key.end());
    return key;
}

}  // namespace

std::vector<Graph> all_cacti(int n) {
    if (n < 1) return {};
    // Every cactus arises from a smaller one by attaching a leaf block (a
    // pendant edge or a cycle) at one vertex.
    std::vector<std::vector<Graph>> level(static_cast<std::size_t>(n + 1));
    level[1].push_back(Graph(1));
    for (int m = 2; m <= n; ++m) {
        std::map<std::vector<int>, std::vector<Graph>> buckets;
        auto offer = [&](Graph g) {
            auto& bucket = buckets[invariant(g)];
            for (const auto& other : bucket)
                if (are_isomorphic(other, g)) return;
            bucket.push_back(std::move(g));
        };
        for (const auto& base : level[static_cast<std::size_t>(m - 1)])
            for (int v = 0; v < base.order(); ++v) offer(attach_pendant(base, v));
        for (int length = 3; length <= m; ++length)
            for (const auto& base : level[static_cast<std::size_t>(m - length + 1)])
                for (int v = 0; v < base.order(); ++v) offer(attach_cycle(base, v, length));
        for (auto& [key, bucket] : buckets)
            for (auto& g : bucket) level[static_cast<std::size_t>(m)].push_back(std::move(g));
    }
    return level[static_cast<std::size_t>(n)];
}

Graph random_cactus(int n, std::mt19937_64& rng, int max_cycle) {
    if (n < 1) throw PreconditionError("random_cactus needs n >= 1");
    Graph g(1);
    while (g.order() < n) {
        const int at = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
        const int room = n - g.order();
        const int longest = std::min(max_cycle, room + 1);
        if (longest >= 3 && std::bernoulli_distribution(0.5)(rng)) {
            g = attach_cycle(g, at, std::uniform_int_distribution<int>(3, longest)(rng));
        } else {
            g = attach_pendant(g, at);
        }
    }
    return g;
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace parhom
