#include "parhom/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

#include "parhom/errors.hpp"

namespace parhom {

namespace {

struct Coloring {
    std::vector<int> left;
    std::vector<int> right;
};

// Individualization-refinement search for bijections a -> b. Both sides are
// refined jointly so color classes always pair up. In involutive mode every
// branching decision v -> w also forces w -> v.
class MappingSearch {
public:
    MappingSearch(const Graph& a, const Graph& b, bool involutive, std::optional<std::uint64_t> seed)
        : a_(a), b_(b), involutive_(involutive) {
        if (seed) rng_.emplace(*seed);
    }

    std::optional<Coloring> initial(std::span<const int> fixed) const {
        if (a_.order() != b_.order() || a_.size() != b_.size()) return std::nullopt;
        Coloring c;
        c.left.resize(static_cast<std::size_t>(a_.order()));
        c.right.resize(static_cast<std::size_t>(b_.order()));
        for (int v = 0; v < a_.order(); ++v) c.left[static_cast<std::size_t>(v)] = a_.degree(v);
        for (int v = 0; v < b_.order(); ++v) c.right[static_cast<std::size_t>(v)] = b_.degree(v);
        if (!refine(c)) return std::nullopt;
        for (int f : fixed)
            if (!individualize(c, f, f)) return std::nullopt;
        return c;
    }

    bool individualize(Coloring& c, int v, int w) const {
        auto vi = static_cast<std::size_t>(v);
        auto wi = static_cast<std::size_t>(w);
        if (c.left[vi] != c.right[wi]) return false;
        if (involutive_ && v != w && c.left[wi] != c.right[vi]) return false;
        const int top = std::max(*std::max_element(c.left.begin(), c.left.end()),
                                 *std::max_element(c.right.begin(), c.right.end()));
        c.left[vi] = c.right[wi] = top + 1;
        if (involutive_ && v != w) c.left[wi] = c.right[vi] = top + 2;
        return refine(c);
    }

    // Calls leaf(perm) at every discrete coloring; stops when leaf returns true.
    template <class Leaf>
    bool run(Coloring c, Leaf& leaf) {
        const auto n = c.left.size();
        std::vector<int> class_size(2 * n + 3, 0);
        for (int x : c.left) ++class_size[static_cast<std::size_t>(x)];
        int branch = -1;
        for (std::size_t v = 0; v < n; ++v)
            if (class_size[static_cast<std::size_t>(c.left[v])] > 1) {
                branch = static_cast<int>(v);
                break;
            }
        if (branch < 0) {
            std::vector<int> where(2 * n + 3, -1);
            for (std::size_t w = 0; w < n; ++w) where[static_cast<std::size_t>(c.right[w])] = static_cast<int>(w);
            Permutation perm(n);
            for (std::size_t v = 0; v < n; ++v) perm[v] = where[static_cast<std::size_t>(c.left[v])];
            return leaf(perm);
        }
        std::vector<int> candidates;
        for (std::size_t w = 0; w < n; ++w)
            if (c.right[w] == c.left[static_cast<std::size_t>(branch)]) candidates.push_back(static_cast<int>(w));
        if (rng_) std::shuffle(candidates.begin(), candidates.end(), *rng_);
        for (int w : candidates) {
            Coloring next = c;
            if (!individualize(next, branch, w)) continue;
            if (run(std::move(next), leaf)) return true;
        }
        return false;
    }

private:
    // Color refinement to the coarsest equitable partition; false when the
    // two sides stop matching.
    bool refine(Coloring& c) const {
        const auto n = c.left.size();
        std::size_t classes = count_classes(c);
        while (true) {
            std::vector<std::tuple<std::vector<int>, int, int>> keys;
            keys.reserve(2 * n);
            auto add = [&](const Graph& g, const std::vector<int>& col, int side) {
                for (int v = 0; v < g.order(); ++v) {
                    std::vector<int> sig{col[static_cast<std::size_t>(v)]};
                    for (int w : g.neighbors(v)) sig.push_back(col[static_cast<std::size_t>(w)]);
                    std::sort(sig.begin() + 1, sig.end());
                    keys.emplace_back(std::move(sig), side, v);
                }
            };
            add(a_, c.left, 0);
            add(b_, c.right, 1);
            std::sort(keys.begin(), keys.end());
            int color = -1;
            std::vector<int> left_count, right_count;
            for (std::size_t k = 0; k < keys.size(); ++k) {
                if (k == 0 || std::get<0>(keys[k]) != std::get<0>(keys[k - 1])) {
                    ++color;
                    left_count.push_back(0);
                    right_count.push_back(0);
                }
                auto& target = std::get<1>(keys[k]) == 0 ? c.left : c.right;
                target[static_cast<std::size_t>(std::get<2>(keys[k]))] = color;
                ++(std::get<1>(keys[k]) == 0 ? left_count : right_count)[static_cast<std::size_t>(color)];
            }
            if (left_count != right_count) return false;
            const auto now = static_cast<std::size_t>(color + 1);
            if (now == classes) return true;
            classes = now;
        }
    }

    static std::size_t count_classes(const Coloring& c) {
        std::vector<int> all(c.left);
        all.insert(all.end(), c.right.begin(), c.right.end());
        std::sort(all.begin(), all.end());
        return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
    }

    const Graph& a_;
    const Graph& b_;
    bool involutive_;
    std::optional<std::mt19937_64> rng_;
};

bool is_identity(std::span<const int> perm) {
    for (std::size_t v = 0; v < perm.size(); ++v)
        if (perm[v] != static_cast<int>(v)) return false;
    return true;
}

int find_root(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
}

}  // namespace

bool is_automorphism(const Graph& g, std::span<const int> perm) {
    const auto n = static_cast<std::size_t>(g.order());
    if (perm.size() != n) return false;
    std::vector<char> hit(n, 0);
    for (int x : perm) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || hit[static_cast<std::size_t>(x)]) return false;
        hit[static_cast<std::size_t>(x)] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) return false;
    return true;
}

bool is_involution(const Graph& g, std::span<const int> perm) {
    if (!is_automorphism(g, perm) || is_identity(perm)) return false;
    for (std::size_t v = 0; v < perm.size(); ++v)
        if (perm[static_cast<std::size_t>(perm[v])] != static_cast<int>(v)) return false;
    return true;
}

std::vector<Permutation> automorphisms(const Graph& g, int vertex_cap, std::size_t group_cap) {
    if (g.order() > vertex_cap)
        throw BudgetError("automorphism enumeration limited to " + std::to_string(vertex_cap) + " vertices");
    std::vector<Permutation> out;
    MappingSearch search(g, g, false, std::nullopt);
    auto start = search.initial({});
    auto leaf = [&](const Permutation& perm) {
        if (!is_automorphism(g, perm)) return false;
        if (out.size() >= group_cap)
            throw BudgetError("automorphism group larger than " + std::to_string(group_cap));
        out.push_back(perm);
        return false;
    };
    if (start) search.run(*start, leaf);
    std::sort(out.begin(), out.end());
    auto id = std::find_if(out.begin(), out.end(), [](const Permutation& p) { return is_identity(p); });
    if (id != out.end()) std::rotate(out.begin(), id, id + 1);
    return out;
}

std::optional<Permutation> find_involution(const Graph& g, std::span<const int> fixed,
                                           std::optional<std::uint64_t> seed) {
    MappingSearch search(g, g, true, seed);
    auto start = search.initial(fixed);
    std::optional<Permutation> found;
    auto leaf = [&](const Permutation& perm) {
        if (!is_involution(g, perm)) return false;
        found = perm;
        return true;
    };
    if (start) search.run(*start, leaf);
    return found;
}

bool has_nontrivial_automorphism(const Graph& g, std::span<const int> fixed) {
    MappingSearch search(g, g, false, std::nullopt);
    auto start = search.initial(fixed);
    bool found = false;
    auto leaf = [&](const Permutation& perm) {
        found = !is_identity(perm) && is_automorphism(g, perm);
        return found;
    };
    if (start) search.run(*start, leaf);
    return found;
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
    MappingSearch search(a, b, false, std::nullopt);
    auto start = search.initial({});
    std::optional<Permutation> found;
    auto leaf = [&](const Permutation& perm) {
        if (relabel(a, perm) != b) return false;
        found = perm;
        return true;
    };
    if (start) search.run(*start, leaf);
    return found;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

Subgraph fixed_subgraph(const Graph& g, std::span<const int> sigma) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (sigma[static_cast<std::size_t>(v)] == v) keep.push_back(v);
    return induced_subgraph(g, std::move(keep));
}

ReductionTrace involution_free_reduction(const Graph& g, std::optional<std::uint64_t> seed) {
    ReductionTrace trace;
    Graph current = g;
    std::vector<int> to_original(static_cast<std::size_t>(g.order()));
    std::iota(to_original.begin(), to_original.end(), 0);
    for (std::uint64_t step = 0;; ++step) {
        std::optional<std::uint64_t> step_seed;
        if (seed) step_seed = *seed + 0x9e3779b97f4a7c15ULL * step;
        auto sigma = find_involution(current, {}, step_seed);
        if (!sigma) break;
        Subgraph fixed = fixed_subgraph(current, *sigma);
        std::vector<int> next_map;
        for (int v : fixed.to_host) next_map.push_back(to_original[static_cast<std::size_t>(v)]);
        to_original = std::move(next_map);
        Graph next = fixed.graph;
        trace.steps.push_back(ReductionStep{std::move(current), std::move(*sigma), std::move(fixed)});
        current = std::move(next);
    }
    trace.final_graph = std::move(current);
    trace.final_to_original = std::move(to_original);
    return trace;
}

std::vector<int> orbit_index(const Graph& g) {
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    MappingSearch search(g, g, false, std::nullopt);
    auto start = search.initial({});
    if (start) {
        for (int v = 0; v < n; ++v) {
            if (find_root(parent, v) != v) continue;
            for (int w = v + 1; w < n; ++w) {
                if (start->left[static_cast<std::size_t>(v)] != start->left[static_cast<std::size_t>(w)]) continue;
                if (find_root(parent, w) == v) continue;
                Coloring c = *start;
                if (!search.individualize(c, v, w)) continue;
                auto leaf = [&](const Permutation& perm) {
                    if (!is_automorphism(g, perm)) return false;
                    for (int x = 0; x < n; ++x) unite(parent, x, perm[static_cast<std::size_t>(x)]);
                    return true;
                };
                search.run(std::move(c), leaf);
            }
        }
    }
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = find_root(parent, v);
        if (index[static_cast<std::size_t>(r)] < 0) index[static_cast<std::size_t>(r)] = next++;
        index[static_cast<std::size_t>(v)] = index[static_cast<std::size_t>(r)];
    }
    return index;
}

std::vector<std::vector<int>> orbits(const Graph& g) {
    auto index = orbit_index(g);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g.order(); ++v) {
        auto k = static_cast<std::size_t>(index[static_cast<std::size_t>(v)]);
        if (k >= out.size()) out.resize(k + 1);
        out[k].push_back(v);
    }
    return out;
}

bool aut_parity(const Graph& g) { return !find_involution(g).has_value(); }

std::vector<std::vector<int>> orbit_preserving_endomorphisms(const Graph& g, int vertex_cap) {
    const int n = g.order();
    if (n > vertex_cap)
        throw BudgetError("endomorphism enumeration limited to " + std::to_string(vertex_cap) + " vertices");
    auto orb = orbits(g);
    auto index = orbit_index(g);
    std::vector<std::vector<int>> out;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    auto extend = [&](auto& self, int v) -> void {
        if (v == n) {
            out.push_back(image);
            return;
        }
        for (int h : orb[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])]) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && !g.adjacent(h, image[static_cast<std::size_t>(w)])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = h;
            self(self, v + 1);
        }
        image[static_cast<std::size_t>(v)] = -1;
    };
    extend(extend, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Nodes of minimum eccentricity in a tree.
std::vector<int> tree_centers(const Graph& t) {
    std::vector<int> best;
    int best_ecc = kInfiniteDistance;
    for (int v = 0; v < t.order(); ++v) {
        auto d = bfs_distances(t, v);
        int ecc = *std::max_element(d.begin(), d.end());
        if (ecc < best_ecc) {
            best_ecc = ecc;
            best.clear();
        }
        if (ecc == best_ecc) best.push_back(v);
    }
    return best;
}

}  // namespace

CenterStructure center_structure(const Graph& g) {
    if (g.order() == 0) throw PreconditionError("empty graph has no center");
    if (!is_connected(g)) throw PreconditionError("center_structure requires a connected graph");
    if (auto bad = cactus_violation(g))
        throw PreconditionError("not a cactus: edge (" + std::to_string(bad->first) + "," +
                                std::to_string(bad->second) + ") lies on two cycles");

    // Contract every cycle edge; the quotient is a tree whose edges are bridges.
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto bd = blocks(g);
    std::vector<Edge> bridges;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        if (bd.blocks[b].size() == 2) {
            bridges.push_back(bd.block_edges[b].front());
            continue;
        }
        for (auto [u, v] : bd.block_edges[b]) unite(parent, u, v);
    }
    std::vector<int> cluster(static_cast<std::size_t>(n), -1);
    int clusters = 0;
    for (int v = 0; v < n; ++v) {
        int r = find_root(parent, v);
        if (cluster[static_cast<std::size_t>(r)] < 0) cluster[static_cast<std::size_t>(r)] = clusters++;
        cluster[static_cast<std::size_t>(v)] = cluster[static_cast<std::size_t>(r)];
    }
    std::vector<Edge> tree_edges;
    for (auto [u, v] : bridges) tree_edges.emplace_back(cluster[static_cast<std::size_t>(u)], cluster[static_cast<std::size_t>(v)]);
    Graph tree = Graph::from_edges(clusters, tree_edges);
    auto centers = tree_centers(tree);

    if (centers.size() == 2) {
        for (auto [u, v] : bridges) {
            int cu = cluster[static_cast<std::size_t>(u)], cv = cluster[static_cast<std::size_t>(v)];
            if ((cu == centers[0] && cv == centers[1]) || (cu == centers[1] && cv == centers[0]))
                return {CenterKind::edge, {std::min(u, v), std::max(u, v)}};
        }
        throw InternalContradiction("adjacent tree centers without a connecting bridge");
    }

    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (cluster[static_cast<std::size_t>(v)] == centers.front()) members.push_back(v);
    if (members.size() == 1) return {CenterKind::vertex, members};

    // The central cluster is a union of cycles; its block-cut tree has blocks
    // as leaves, hence a single center node.
    Subgraph core = induced_subgraph(g, members);
    auto core_blocks = blocks(core.graph);
    auto core_centers = tree_centers(core_blocks.block_cut_tree);
    if (core_centers.size() != 1) throw InternalContradiction("block-cut tree of a cycle cluster has two centers");
    const int c = core_centers.front();
    const int nb = static_cast<int>(core_blocks.blocks.size());
    if (c < nb) {
        std::vector<int> verts;
        for (int v : core_blocks.blocks[static_cast<std::size_t>(c)]) verts.push_back(core.to_host[static_cast<std::size_t>(v)]);
        std::sort(verts.begin(), verts.end());
        return {CenterKind::cycle, verts};
    }
    return {CenterKind::vertex, {core.to_host[static_cast<std::size_t>(core_blocks.cut_vertices[static_cast<std::size_t>(c - nb)])]}};
}

std::optional<std::vector<int>> fixed_cycle(const Graph& g) {
    if (find_involution(g)) throw PreconditionError("graph has an involution");
    if (!has_nontrivial_automorphism(g)) return std::nullopt;
    auto center = center_structure(g);
    if (center.kind != CenterKind::cycle)
        throw InternalContradiction("involution-free symmetric cactus whose center is not a cycle");
    for (auto& cyc : cycles(g)) {
        std::vector<int> sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == center.vertices) return cyc;
    }
    throw InternalContradiction("center cycle not found among cycles");
}

const char* to_string(CenterKind kind) {
    switch (kind) {
        case CenterKind::vertex: return "vertex";
        case CenterKind::edge: return "edge";
        case CenterKind::cycle: return "cycle";
    }
    return "?";
}

}  // namespace parhom
