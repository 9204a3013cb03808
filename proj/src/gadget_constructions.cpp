#include <algorithm>
#include <set>

#include "gadget_internal.hpp"
#include "parhom/automorphism.hpp"
#include "parhom/errors.hpp"
#include "parhom/parity.hpp"

namespace parhom {

namespace detail {

std::vector<std::vector<int>> cycle_components(const Graph& h, const std::vector<int>& cycle) {
    const std::size_t l = cycle.size();
    std::set<Edge> cycle_edges;
    for (std::size_t j = 0; j < l; ++j) {
        int a = cycle[j], b = cycle[(j + 1) % l];
        cycle_edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<Edge> rest;
    for (auto e : h.edges())
        if (!cycle_edges.contains(e)) rest.push_back(e);
    auto without = Graph::from_edges(h.order(), rest);
    std::vector<int> label(static_cast<std::size_t>(h.order()), -1);
    auto comps = connected_components(without);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) label[static_cast<std::size_t>(v)] = static_cast<int>(c);
    std::vector<std::vector<int>> out;
    for (int x : cycle) out.push_back(comps[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])]);
    return out;
}

std::vector<int> vertices_outside(const Graph& h, const std::vector<int>& excluded) {
    std::vector<char> skip(static_cast<std::size_t>(h.order()), 0);
    for (int v : excluded) skip[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    for (int v = 0; v < h.order(); ++v)
        if (!skip[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

void require_valid(const Graph& h, const HardnessGadget& g, const std::vector<int>& promised, const std::string& what) {
    auto check = verify_hardness_gadget(h, g);
    if (!check.ok()) throw InternalContradiction(what + " produced an invalid gadget: " + check.summary());
    auto dist = check_distance_requirements(h, g, promised);
    if (!dist.ok()) throw InternalContradiction(what + " broke its distance requirements: " + dist.summary());
}

void note(FinderTrace* trace, std::string step) {
    if (trace) trace->push_back(std::move(step));
}

}  // namespace detail

namespace {

using detail::require_valid;
using detail::vertices_outside;

std::vector<int> minus(std::span<const int> xs, std::initializer_list<int> drop) {
    std::vector<int> out;
    for (int x : xs)
        if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
    return out;
}

Path reversed(Path p) {
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

// a followed by b, where b starts at the last vertex of a.
Path joined(const Path& a, const Path& b) {
    Path out = a;
    out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    return out;
}

Path extended(Path p, int v) {
    p.vertices.push_back(v);
    return p;
}

// Component of h - x containing v, as a label; x itself gets -1.
std::vector<int> side_labels(const Graph& h, int x) {
    std::vector<int> label(static_cast<std::size_t>(h.order()), -1);
    int next = 0;
    for (int start = 0; start < h.order(); ++start) {
        if (start == x || label[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<int> stack = {start};
        label[static_cast<std::size_t>(start)] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : h.neighbors(v))
                if (w != x && label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

struct RootedPiece {
    Subgraph sub;
    int root = -1;
};

RootedPiece piece(const Graph& h, const std::vector<int>& vertices, int root) {
    if (std::find(vertices.begin(), vertices.end(), root) == vertices.end())
        throw PreconditionError("component does not contain vertex " + std::to_string(root));
    RootedPiece p{induced_subgraph(h, vertices), -1};
    p.root = p.sub.local(root);
    return p;
}

void require_cut_component(const Graph& h, int x, const std::vector<int>& component) {
    if (static_cast<int>(component.size()) >= h.order())
        throw PreconditionError("component must leave out part of the graph at " + std::to_string(x));
    auto label = side_labels(h, x);
    std::set<int> sides;
    for (int v : component)
        if (v != x) sides.insert(label[static_cast<std::size_t>(v)]);
    std::set<int> expected;
    for (int v = 0; v < h.order(); ++v)
        if (sides.contains(label[static_cast<std::size_t>(v)])) expected.insert(v);
    expected.insert(x);
    if (expected != std::set<int>(component.begin(), component.end()))
        throw PreconditionError("vertex set is not a union of components at " + std::to_string(x));
}

// Shortcut gadget on a proper-mosaic piece, when the piece has a shortcut.
std::optional<HardnessGadget> piece_shortcut_gadget(const Graph& h, const RootedPiece& p) {
    auto sc = find_shortcut(p.sub.graph, p.root);
    if (!sc) return std::nullopt;
    return gadget_from_shortcut(h, map_path(sc->path, p.sub.to_host));
}

}  // namespace

HardnessGadget gadget_from_shortcut(const Graph& h, const Path& path) {
    if (!is_cactus(h)) throw PreconditionError("graph is not a cactus");
    if (path.length() < 1 || !is_path_in(h, path)) throw PreconditionError("not a path of the graph with an edge");
    int v1 = path.front(), v2 = path.back();
    for (int v : {v1, v2})
        if (h.degree(v) % 2 == 0) throw PreconditionError("end " + std::to_string(v) + " has even degree");
    auto shortest = unique_path(h, v1, v2);
    if (!shortest || *shortest != path) throw PreconditionError("path is not the unique shortest path");

    auto bd = blocks(h);
    std::map<Edge, int> square_of;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b)
        if (bd.blocks[b].size() == 4)
            for (auto e : bd.block_edges[b]) square_of[e] = static_cast<int>(b);
    std::set<int> squares;
    for (std::size_t a = 0; a + 1 < path.vertices.size(); ++a) {
        int u = path.vertices[a], v = path.vertices[a + 1];
        auto it = square_of.find({std::min(u, v), std::max(u, v)});
        if (it == square_of.end())
            throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not on a 4-cycle");
        if (!squares.insert(it->second).second)
            throw PreconditionError("two path edges lie on one 4-cycle");
    }

    // Keep the hub end and move the far end to the first odd-degree vertex,
    // so that every vertex strictly between them has even degree.
    std::size_t start = path.vertices.size() - 2;
    while (h.degree(path.vertices[start]) % 2 == 0) --start;
    Path p;
    p.vertices.assign(path.vertices.begin() + static_cast<std::ptrdiff_t>(start), path.vertices.end());

    HardnessGadget g;
    g.beta = 1;
    g.hub = v2;
    g.selector = p.vertices[p.vertices.size() - 2];
    int square = square_of.at({std::min(g.hub, g.selector), std::max(g.hub, g.selector)});
    for (int w : h.neighbors(g.hub))
        if (w != g.selector && square_of.contains({std::min(g.hub, w), std::max(g.hub, w)}) &&
            square_of.at({std::min(g.hub, w), std::max(g.hub, w)}) == square)
            g.target = w;
    g.cancelled = {g.target};
    g.anchor[g.target] = p.front();
    g.walk_length[g.target] = p.length() + 1;
    g.outs = minus(h.neighbors(g.hub), {g.selector, g.target});
    g = normalized(g);

    auto promised = vertices_outside(h, p.vertices);
    promised.push_back(v2);
    require_valid(h, g, promised, "shortcut construction");
    return g;
}

HardnessGadget gadget_mosaic_mosaic(const Graph& h, int x, const std::vector<int>& first,
                                    const std::vector<int>& second) {
    require_cut_component(h, x, first);
    require_cut_component(h, x, second);
    std::vector<RootedPiece> pieces = {piece(h, first, x), piece(h, second, x)};
    for (const auto& p : pieces)
        if (classify_mosaic(p.sub.graph, p.root).verdict != MosaicVerdict::proper_mosaic)
            throw PreconditionError("component is not a proper mosaic");
    std::vector<int> both = first;
    both.insert(both.end(), second.begin(), second.end());
    auto promised = vertices_outside(h, both);
    for (const auto& p : pieces)
        if (auto g = piece_shortcut_gadget(h, p)) {
            require_valid(h, *g, promised, "mosaic pair (shortcut)");
            return *g;
        }
    auto a = map_23path(find_23path(pieces[0].sub.graph, pieces[0].root), pieces[0].sub.to_host);
    auto b = map_23path(find_23path(pieces[1].sub.graph, pieces[1].root), pieces[1].sub.to_host);
    Path through = joined(reversed(extended(a.root_path, a.degree_three)), extended(b.root_path, b.degree_three));
    auto g = gadget_from_shortcut(h, through);
    require_valid(h, g, promised, "mosaic pair");
    return g;
}

HardnessGadget gadget_mosaic_oddroot(const Graph& h, int x, const std::vector<int>& component) {
    require_cut_component(h, x, component);
    if (h.degree(x) % 2 == 0) throw PreconditionError("vertex " + std::to_string(x) + " has even degree");
    auto p = piece(h, component, x);
    if (classify_mosaic(p.sub.graph, p.root).verdict != MosaicVerdict::proper_mosaic)
        throw PreconditionError("component is not a proper mosaic");
    std::vector<int> fixed = {p.root};
    if (find_involution(p.sub.graph, fixed)) throw PreconditionError("rooted component has an involution");
    auto promised = vertices_outside(h, component);
    if (auto g = piece_shortcut_gadget(h, p)) {
        require_valid(h, *g, promised, "odd root (shortcut)");
        return *g;
    }
    auto tp = map_23path(find_23path(p.sub.graph, p.root), p.sub.to_host);
    auto g = gadget_from_shortcut(h, reversed(extended(tp.root_path, tp.degree_three)));
    require_valid(h, g, promised, "odd root");
    return g;
}

HardnessGadget gadget_phg_23path(const Graph& h, int x, const TwoThreePath& path,
                                 const PartialHardnessGadget& partial) {
    if (auto c = verify_23path(h, x, path); !c.ok()) throw PreconditionError("2,3-path: " + c.summary());
    if (auto c = verify_partial_gadget(h, x, partial); !c.ok())
        throw PreconditionError("partial gadget: " + c.summary());
    auto label = side_labels(h, x);
    if (label[static_cast<std::size_t>(path.degree_two)] == label[static_cast<std::size_t>(partial.hub)])
        throw PreconditionError("2,3-path and partial gadget lie on the same side of " + std::to_string(x));

    Path to_two = joined(reversed(partial.root_path), extended(path.root_path, path.degree_two));
    HardnessGadget g;
    g.beta = to_two.length() + 1;
    g.hub = partial.hub;
    g.selector = partial.selector;
    g.outs = partial.outs;
    WalkParity parity(h);
    bool odd_two = parity(g.selector, path.degree_two, g.beta + 1);
    bool odd_three = parity(g.selector, path.degree_three, g.beta + 1);
    if (odd_two == odd_three)
        throw InternalContradiction("walk parities to the degree-2 and degree-3 ends agree");
    g.target = odd_two ? path.degree_three : path.degree_two;
    g = normalized(g);

    std::vector<int> excluded = path.root_path.vertices;
    excluded.insert(excluded.end(), partial.root_path.vertices.begin(), partial.root_path.vertices.end());
    excluded.push_back(path.degree_two);
    excluded.push_back(path.degree_three);
    require_valid(h, g, vertices_outside(h, excluded), "partial gadget with 2,3-path");
    return g;
}

HardnessGadget gadget_phg_phg(const Graph& h, int x, const PartialHardnessGadget& first,
                              const PartialHardnessGadget& second) {
    for (const auto* p : {&first, &second})
        if (auto c = verify_partial_gadget(h, x, *p); !c.ok())
            throw PreconditionError("partial gadget: " + c.summary());
    auto label = side_labels(h, x);
    if (label[static_cast<std::size_t>(first.hub)] == label[static_cast<std::size_t>(second.hub)])
        throw PreconditionError("partial gadgets lie on the same side of " + std::to_string(x));

    Path between = joined(reversed(first.root_path), second.root_path);
    const int l = between.length();
    WalkParity parity(h);
    bool odd_to_selector = parity(first.selector, second.selector, l + 2);
    bool odd_to_hub = parity(first.selector, second.hub, l + 3);
    if (odd_to_selector == odd_to_hub)
        throw InternalContradiction("walk parities to the second selector and hub agree");

    HardnessGadget g;
    g.hub = first.hub;
    g.selector = first.selector;
    g.outs = first.outs;
    if (!odd_to_selector) {
        g.target = second.selector;
        g.beta = l + 1;
    } else {
        g.target = second.hub;
        g.beta = l + 2;
    }
    g = normalized(g);

    std::vector<int> excluded = first.root_path.vertices;
    excluded.insert(excluded.end(), second.root_path.vertices.begin(), second.root_path.vertices.end());
    excluded.push_back(second.hub);
    require_valid(h, g, vertices_outside(h, excluded), "two partial gadgets");
    return g;
}

HardnessGadget gadget_cycles(const Graph& h, const std::vector<int>& cycle, FinderTrace* trace) {
    const int l = static_cast<int>(cycle.size());
    if (l < 3 || l == 4) throw PreconditionError("cycle length must be 3 or at least 5");
    if (!is_cactus(h)) throw PreconditionError("graph is not a cactus");
    for (int j = 0; j < l; ++j)
        if (!h.adjacent(cycle[static_cast<std::size_t>(j)], cycle[static_cast<std::size_t>((j + 1) % l)]))
            throw PreconditionError("vertices do not form a cycle");

    auto comps = detail::cycle_components(h, cycle);
    const auto& home = comps[0];
    {
        auto rest = vertices_outside(h, home);
        rest.push_back(cycle[0]);
        auto sub = induced_subgraph(h, rest);
        std::vector<int> fixed = {sub.local(cycle[0])};
        if (find_involution(sub.graph, fixed))
            throw PreconditionError("the graph away from the first cycle vertex has an involution fixing it");
    }
    auto in_family = [&](int j) { return j != 1 && !(l % 2 == 0 && j == l / 2 + 1); };
    std::vector<RootedPiece> pieces(static_cast<std::size_t>(l + 1));
    for (int j = 2; j <= l; ++j) {
        if (!in_family(j)) continue;
        auto& p = pieces[static_cast<std::size_t>(j)];
        p = piece(h, comps[static_cast<std::size_t>(j - 1)], cycle[static_cast<std::size_t>(j - 1)]);
        if (classify_mosaic(p.sub.graph, p.root).verdict == MosaicVerdict::not_mosaic)
            throw PreconditionError("component at cycle position " + std::to_string(j) + " is not a mosaic");
    }
    const auto& promised = home;

    for (int j = 2; j <= l; ++j)
        if (in_family(j))
            if (auto g = piece_shortcut_gadget(h, pieces[static_cast<std::size_t>(j)])) {
                require_valid(h, *g, promised, "cycle (shortcut)");
                detail::note(trace, "shortcut in a cycle component");
                return *g;
            }
    for (int j = 2; j <= l; ++j) {
        if (!in_family(j)) continue;
        const auto& p = pieces[static_cast<std::size_t>(j)];
        int xj = cycle[static_cast<std::size_t>(j - 1)];
        if (h.degree(xj) % 2 == 1 && classify_mosaic(p.sub.graph, p.root).verdict == MosaicVerdict::proper_mosaic) {
            auto g = gadget_mosaic_oddroot(h, xj, comps[static_cast<std::size_t>(j - 1)]);
            require_valid(h, g, promised, "cycle (odd root)");
            detail::note(trace, "odd-degree cycle vertex with a proper mosaic");
            return g;
        }
    }

    auto even = [&](int v) { return h.degree(v) % 2 == 0; };
    // Cycle vertices by 1-based position, wrapping around; the reversed
    // orientation keeps x_1 and walks the other way.
    auto oriented = [&](bool reverse) {
        return [&, reverse](int j) {
            int k = ((j - 1) % l + l) % l;
            if (reverse && k != 0) k = l - k;
            return cycle[static_cast<std::size_t>(k)];
        };
    };
    auto finish = [&](HardnessGadget g, const char* which) {
        g = normalized(g);
        require_valid(h, g, promised, which);
        detail::note(trace, which);
        return g;
    };

    if (l % 2 == 1) {
        const int m = (l + 1) / 2;
        for (bool reverse : {false, true}) {
            auto X = oriented(reverse);
            if (!even(X(m))) continue;
            // Hub next to the even vertex opposite x_1.
            HardnessGadget g;
            g.beta = 1;
            g.hub = X(m + 1);
            g.target = g.selector = X(m);
            int o = X(m + 2);
            g.outs = {o};
            g.cancelled = minus(h.neighbors(g.hub), {o, g.selector});
            for (int u : g.cancelled) {
                g.anchor[u] = g.hub;
                g.walk_length[u] = l - 1;
            }
            return finish(g, "odd cycle, even vertex opposite the root");
        }
        for (bool reverse : {false, true}) {
            auto X = oriented(reverse);
            int t = -1;
            for (int c = m - 1; c >= 2 && t < 0; --c)
                if (even(X(c))) t = c;
            if (t < 0) continue;
            HardnessGadget g;
            g.hub = X(m);
            g.selector = X(m - 1);
            g.target = X(t);
            g.beta = m - t;
            int o = X(m + 1);
            g.outs = {o};
            g.cancelled = minus(h.neighbors(g.hub), {o, g.selector});
            for (int u : g.cancelled) {
                g.anchor[u] = g.hub;
                g.walk_length[u] = l - 1;
            }
            return finish(g, "odd cycle, even vertex near the root");
        }
    } else {
        for (bool reverse : {false, true}) {
            auto X = oriented(reverse);
            int j = -1;
            for (int c = 2; c <= l - 2 && j < 0; ++c)
                if (in_family(c) && even(X(c))) j = c;
            if (j < 0) continue;
            HardnessGadget g;
            g.hub = X(j + 1);
            if (even(g.hub)) {
                g.beta = 1;
                g.target = g.selector = X(j);
                g.outs = minus(h.neighbors(g.hub), {g.selector});
                return finish(g, "even cycle, even hub");
            }
            g.beta = l / 2 - 1;
            g.selector = X(j + 2);
            g.cancelled = {X(j)};
            g.anchor[X(j)] = X(j);
            g.walk_length[X(j)] = 2;
            g.outs = minus(h.neighbors(g.hub), {X(j), X(j + 2)});
            g.target = X(j + 2 + l / 2);
            return finish(g, "even cycle, odd hub");
        }
    }
    throw InternalContradiction("no cycle case applies: every eligible cycle vertex has odd degree");
}

PartialHardnessGadget partial_gadget_tree(const Graph& h, int root) {
    if (root < 0 || root >= h.order()) throw PreconditionError("root not in graph");
    if (!is_connected(h) || h.size() + 1 != static_cast<std::size_t>(h.order()))
        throw PreconditionError("graph is not a tree");
    if (h.order() < 3) throw PreconditionError("tree has fewer than three vertices");
    std::vector<int> fixed = {root};
    if (find_involution(h, fixed)) throw PreconditionError("rooted tree has an involution");

    auto d = bfs_distances(h, root);
    int o = -1;
    for (int v = 0; v < h.order(); ++v)
        if (v != root && h.degree(v) == 1 &&
            (o < 0 || d[static_cast<std::size_t>(v)] > d[static_cast<std::size_t>(o)]))
            o = v;
    PartialHardnessGadget p;
    p.hub = h.neighbors(o)[0];
    p.outs = {o};
    for (int w : h.neighbors(p.hub))
        if (d[static_cast<std::size_t>(w)] < d[static_cast<std::size_t>(p.hub)]) p.selector = w;
    if (p.hub == root || p.selector < 0) throw InternalContradiction("farthest leaf is adjacent to the root");
    p.root_path = *unique_path(h, root, p.selector);
    auto check = verify_partial_gadget(h, root, p);
    if (!check.ok()) throw InternalContradiction("tree partial gadget fails verification: " + check.summary());
    return p;
}

}  // namespace parhom
