// Slow, independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <bit>
#include <numeric>
#include <set>
#include <vector>

#include "parhom/gadgets.hpp"
#include "parhom/graph.hpp"

namespace oracle {

using parhom::Graph;

inline Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<parhom::Edge> e(edges.begin(), edges.end());
    return Graph::from_edges(n, e);
}

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(static_cast<std::size_t>(g.order()), std::vector<bool>(static_cast<std::size_t>(g.order())));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
    return m;
}

// Number of simple u-v paths avoiding the edge (u, v) itself.
inline int detours(const Graph& g, int u, int v) {
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    int count = 0;
    std::function<void(int)> go = [&](int a) {
        if (a == v) {
            ++count;
            return;
        }
        used[a] = 1;
        for (int b : g.neighbors(a)) {
            if (used[b] || (a == u && b == v)) continue;
            go(b);
        }
        used[a] = 0;
    };
    go(u);
    return count;
}

inline bool is_cactus(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (detours(g, u, v) > 1) return false;
    return true;
}

inline int component_count(const Graph& g, int removed = -1) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    int count = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (s == removed || seen[s]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : g.neighbors(a))
                if (b != removed && !seen[b]) {
                    seen[b] = 1;
                    stack.push_back(b);
                }
        }
    }
    return count;
}

inline std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> out;
    const int base = component_count(g);
    for (int v = 0; v < g.order(); ++v) {
        int isolated = g.degree(v) == 0 ? 1 : 0;
        if (component_count(g, v) > base - isolated) out.push_back(v);
    }
    return out;
}

inline std::uint64_t walks(const Graph& g, int u, int v, int k) {
    if (k == 0) return u == v ? 1 : 0;
    std::uint64_t total = 0;
    for (int w : g.neighbors(u)) total += walks(g, w, v, k - 1);
    return total;
}

// All shortest u-v paths, by DFS over all simple paths.
inline std::vector<std::vector<int>> shortest_paths(const Graph& g, int u, int v) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur{u};
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    used[u] = 1;
    std::function<void(int)> go = [&](int a) {
        if (a == v) {
            all.push_back(cur);
            return;
        }
        for (int b : g.neighbors(a)) {
            if (used[b]) continue;
            used[b] = 1;
            cur.push_back(b);
            go(b);
            cur.pop_back();
            used[b] = 0;
        }
    };
    go(u);
    if (all.empty()) return all;
    std::size_t best = all.front().size();
    for (auto& p : all) best = std::min(best, p.size());
    std::vector<std::vector<int>> out;
    for (auto& p : all)
        if (p.size() == best) out.push_back(p);
    return out;
}

inline std::uint64_t homs(const Graph& g, const Graph& h, const std::vector<std::vector<int>>& dom) {
    const auto n = static_cast<std::size_t>(g.order());
    for (auto& d : dom)
        if (d.empty()) return 0;
    std::vector<std::size_t> digit(n, 0);
    auto hm = matrix(h);
    auto edges = g.edges();
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (auto [a, b] : edges)
            if (!hm[dom[a][digit[a]]][dom[b][digit[b]]]) {
                ok = false;
                break;
            }
        if (ok) ++count;
        std::size_t k = 0;
        while (k < n && ++digit[k] == dom[k].size()) digit[k++] = 0;
        if (k == n) break;
    }
    return count;
}

inline std::uint64_t homs(const Graph& g, const Graph& h) {
    std::vector<int> all(static_cast<std::size_t>(h.order()));
    std::iota(all.begin(), all.end(), 0);
    return homs(g, h, std::vector<std::vector<int>>(static_cast<std::size_t>(g.order()), all));
}

inline bool preserves(const Graph& g, const Graph& h, const std::vector<int>& perm) {
    for (auto [u, v] : g.edges())
        if (!h.adjacent(perm[u], perm[v])) return false;
    return g.size() == h.size();
}

inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
    std::vector<int> p(static_cast<std::size_t>(g.order()));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (preserves(g, g, p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (preserves(a, b, p)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool has_involution(const Graph& g) {
    for (auto& p : automorphisms(g)) {
        bool identity = true, order_two = true;
        for (std::size_t v = 0; v < p.size(); ++v) {
            identity &= p[v] == static_cast<int>(v);
            order_two &= p[p[v]] == static_cast<int>(v);
        }
        if (!identity && order_two) return true;
    }
    return false;
}

inline std::uint64_t independent_sets(const Graph& g) {
    std::uint64_t count = 0;
    auto edges = g.edges();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (((s >> u) & 1) && ((s >> v) & 1)) ok = false;
        count += ok;
    }
    return count;
}

// Exact k-walk counts from u to every vertex, by dynamic programming.
inline std::vector<std::uint64_t> walk_counts(const Graph& g, int u, int k) {
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(g.order()), 0);
    cur[u] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<std::uint64_t> next(cur.size(), 0);
        for (int v = 0; v < g.order(); ++v)
            for (int w : g.neighbors(v)) next[w] += cur[v];
        cur = std::move(next);
    }
    return cur;
}

inline bool odd_walks(const Graph& g, int u, int v, int k) { return walk_counts(g, u, k)[v] % 2 == 1; }

inline std::vector<int> distances(const Graph& g, int u) {
    std::vector<int> d(static_cast<std::size_t>(g.order()), 1 << 20);
    d[u] = 0;
    std::vector<int> q{u};
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int w : g.neighbors(q[i]))
            if (d[w] > d[q[i]] + 1) {
                d[w] = d[q[i]] + 1;
                q.push_back(w);
            }
    return d;
}

// The four gadget conditions, checked from exact walk counts.
inline bool is_gadget(const Graph& g, const parhom::HardnessGadget& x) {
    std::set<int> nbrs(g.neighbors(x.hub).begin(), g.neighbors(x.hub).end());
    std::multiset<int> parts(x.outs.begin(), x.outs.end());
    parts.insert(x.selector);
    parts.insert(x.cancelled.begin(), x.cancelled.end());
    if (std::set<int>(parts.begin(), parts.end()) != nbrs || parts.size() != nbrs.size()) return false;
    if (x.outs.size() % 2 == 0) return false;
    std::vector<int> ys = x.outs;
    ys.push_back(x.selector);
    auto to_target = walk_counts(g, x.target, x.beta);
    for (int o : x.outs)
        for (int y : ys) {
            std::vector<int> found;
            for (int z = 0; z < g.order(); ++z)
                if (g.adjacent(z, o) && g.adjacent(z, y) && to_target[z] % 2 == 1) found.push_back(z);
            if (found != std::vector<int>{x.hub}) return false;
        }
    if (odd_walks(g, x.selector, x.target, x.beta + 1)) return false;
    for (int u : x.cancelled) {
        if (!x.anchor.contains(u) || !x.walk_length.contains(u)) return false;
        auto from = walk_counts(g, x.anchor.at(u), x.walk_length.at(u));
        if (from[u] % 2 == 1) return false;
        for (int y : ys)
            if (from[y] % 2 == 0) return false;
    }
    return true;
}

inline bool meets_distance_requirements(const Graph& g, const parhom::HardnessGadget& x, int v) {
    auto d = distances(g, v);
    auto nearest = [&](std::vector<int> set) {
        int best = 1 << 20;
        for (int y : set) best = std::min(best, d[y]);
        return best;
    };
    std::vector<int> base = x.outs;
    base.push_back(x.selector);
    if (nearest(base) + d[x.target] <= x.beta - 1) return false;
    for (int u : x.cancelled) {
        auto with_u = base;
        with_u.push_back(u);
        if (d[x.anchor.at(u)] + nearest(with_u) <= x.walk_length.at(u) - 2) return false;
    }
    return true;
}

// 0: not a mosaic, 1: mosaic without a cycle, 2: proper mosaic. Tries every
// core set containing the root.
inline int mosaic_verdict(const Graph& g, int root) {
    const int n = g.order();
    if (!oracle::is_cactus(g) || component_count(g) != 1) return 0;
    for (std::uint32_t core = 0; core < (1U << n); ++core) {
        if (!(core >> root & 1U)) continue;
        auto in = [&](int v) { return (core >> v & 1U) != 0; };
        std::vector<std::pair<int, int>> inside;
        std::vector<int> matched(static_cast<std::size_t>(n), 0);
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (in(u) && in(v)) inside.emplace_back(u, v);
            else if (in(u) != in(v)) {
                ++matched[u];
                ++matched[v];
            } else ok = false;
        }
        for (int v = 0; v < n && ok; ++v) {
            if (!in(v) && matched[v] != 1) ok = false;
            if (in(v) && matched[v] > 1) ok = false;
        }
        if (!ok) continue;
        int core_size = std::popcount(core);
        if (inside.empty()) {
            if (core_size == 1) return 1;
            continue;
        }
        // The core must be connected and every core edge must lie on a 4-cycle
        // made of core edges; in a cactus that makes it a union of 4-cycles.
        std::vector<int> ids(static_cast<std::size_t>(n), -1);
        int next = 0;
        for (int v = 0; v < n; ++v)
            if (in(v)) ids[v] = next++;
        std::vector<parhom::Edge> local;
        for (auto [u, v] : inside) local.emplace_back(ids[u], ids[v]);
        auto h = Graph::from_edges(core_size, local);
        if (component_count(h) != 1) continue;
        bool squares = true;
        for (auto [u, v] : h.edges()) {
            bool on_square = false;
            for (int a : h.neighbors(u))
                for (int b : h.neighbors(v))
                    if (a != v && b != u && a != b && h.adjacent(a, b)) on_square = true;
            if (!on_square || detours(h, u, v) != 1) squares = false;
        }
        if (squares) return 2;
    }
    return 0;
}

// Every k-walk from u to v.
inline std::vector<std::vector<int>> all_walks(const Graph& g, int u, int v, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{u};
    std::function<void()> go = [&]() {
        if (static_cast<int>(cur.size()) == k + 1) {
            if (cur.back() == v) out.push_back(cur);
            return;
        }
        for (int w : g.neighbors(cur.back())) {
            cur.push_back(w);
            go();
            cur.pop_back();
        }
    };
    go();
    return out;
}

// Homomorphism count by backtracking in breadth-first order, checking each
// edge as soon as both ends are placed.
inline std::uint64_t homs_backtrack(const Graph& g, const Graph& h, const std::vector<std::vector<int>>& dom) {
    const int n = g.order();
    std::vector<int> order, seen(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        order.push_back(r);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head)
            for (int w : g.neighbors(order[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
    }
    auto hm = matrix(h);
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::uint64_t count = 0;
    auto go = [&](auto& self, std::size_t k) -> void {
        if (k == order.size()) {
            ++count;
            return;
        }
        int v = order[k];
        for (int c : dom[v]) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (image[w] >= 0 && !hm[c][image[w]]) ok = false;
            if (!ok) continue;
            image[v] = c;
            self(self, k + 1);
            image[v] = -1;
        }
    };
    go(go, 0);
    return count;
}

// Parity of the sum over independent sets J of lambda^|J| mu^(n-|J|).
inline bool z_parity(const Graph& g, std::uint64_t lambda, std::uint64_t mu) {
    const int n = g.order();
    auto edges = g.edges();
    std::uint64_t total = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (((s >> u) & 1) && ((s >> v) & 1)) ok = false;
        if (!ok) continue;
        int in = std::popcount(s);
        std::uint64_t term = 1;
        for (int k = 0; k < in; ++k) term = term * (lambda % 2) % 2;
        for (int k = in; k < n; ++k) term = term * (mu % 2) % 2;
        total ^= term;
    }
    return total == 1;
}


}  // namespace oracle
