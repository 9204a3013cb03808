#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "parhom/automorphism.hpp"
#include "parhom/errors.hpp"
#include "parhom/gadgets.hpp"

namespace parhom {

namespace {

MosaicCertificate rejected(std::string reason) {
    MosaicCertificate m;
    m.reason = std::move(reason);
    return m;
}

}  // namespace

MosaicCertificate classify_mosaic(const Graph& h, int root) {
    if (root < 0 || root >= h.order()) throw PreconditionError("root " + std::to_string(root) + " not in graph");
    if (!is_connected(h)) return rejected("graph is disconnected");
    if (!is_cactus(h)) return rejected("graph is not a cactus");

    auto bd = blocks(h);
    std::vector<char> on_cycle(static_cast<std::size_t>(h.order()), 0);
    bool any_cycle = false;
    for (const auto& b : bd.blocks) {
        if (b.size() < 3) continue;
        if (b.size() != 4) return rejected("cycle of length " + std::to_string(b.size()));
        any_cycle = true;
        for (int v : b) on_cycle[static_cast<std::size_t>(v)] = 1;
    }

    MosaicCertificate m;
    if (!any_cycle) {
        if (h.order() > 2) return rejected("acyclic with more than one edge");
        m.verdict = MosaicVerdict::mosaic;
        m.core = {root};
        for (int v = 0; v < h.order(); ++v)
            if (v != root) {
                m.bristle_vertices.push_back(v);
                m.bristles.emplace_back(std::min(v, root), std::max(v, root));
            }
        return m;
    }

    if (!on_cycle[static_cast<std::size_t>(root)]) return rejected("root is not on a cycle");
    for (auto [u, v] : h.edges()) {
        bool cu = on_cycle[static_cast<std::size_t>(u)], cv = on_cycle[static_cast<std::size_t>(v)];
        if (cu && cv) {
            // Both ends on cycles: the edge must itself be a cycle edge.
            bool cycle_edge = false;
            for (std::size_t b = 0; b < bd.blocks.size() && !cycle_edge; ++b)
                if (bd.blocks[b].size() == 4)
                    for (auto e : bd.block_edges[b])
                        if (e == Edge{u, v}) cycle_edge = true;
            if (!cycle_edge)
                return rejected("bridge " + std::to_string(u) + "-" + std::to_string(v) + " between cycles");
        } else if (!cu && !cv) {
            return rejected("edge " + std::to_string(u) + "-" + std::to_string(v) + " away from the cycles");
        }
    }
    std::vector<int> bristles_at(static_cast<std::size_t>(h.order()), 0);
    for (int v = 0; v < h.order(); ++v) {
        if (on_cycle[static_cast<std::size_t>(v)]) {
            m.core.push_back(v);
            continue;
        }
        if (h.degree(v) != 1) return rejected("vertex " + std::to_string(v) + " off the cycles has degree > 1");
        int c = h.neighbors(v)[0];
        if (++bristles_at[static_cast<std::size_t>(c)] > 1)
            return rejected("vertex " + std::to_string(c) + " carries two bristles");
        m.bristle_vertices.push_back(v);
        m.bristles.emplace_back(std::min(v, c), std::max(v, c));
    }
    std::sort(m.bristles.begin(), m.bristles.end());
    // The core is connected because every bristle is a leaf of a connected graph.
    m.verdict = MosaicVerdict::proper_mosaic;
    return m;
}

TwoThreePath find_23path(const Graph& h, int root) {
    auto cert = classify_mosaic(h, root);
    if (cert.verdict != MosaicVerdict::proper_mosaic)
        throw PreconditionError("not a proper mosaic: " + (cert.reason.empty() ? "no cycle" : cert.reason));
    std::vector<int> fixed = {root};
    if (find_involution(h, fixed)) throw PreconditionError("rooted mosaic has an involution");

    auto bd = blocks(h);
    std::map<Edge, int> cycle_of;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b)
        if (bd.blocks[b].size() >= 3)
            for (auto e : bd.block_edges[b]) cycle_of[e] = static_cast<int>(b);
    auto key = [](int u, int v) { return Edge{std::min(u, v), std::max(u, v)}; };

    // Longest path from the root along cycle edges, one edge per cycle.
    // Neighbours are visited in increasing order, so the first longest path
    // found is the lexicographically smallest.
    std::vector<int> best, current = {root};
    std::set<int> used_cycles;
    std::vector<char> visited(static_cast<std::size_t>(h.order()), 0);
    visited[static_cast<std::size_t>(root)] = 1;
    std::function<void()> extend = [&]() {
        if (current.size() > best.size()) best = current;
        int v = current.back();
        for (int w : h.neighbors(v)) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            auto it = cycle_of.find(key(v, w));
            if (it == cycle_of.end() || used_cycles.contains(it->second)) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            used_cycles.insert(it->second);
            current.push_back(w);
            extend();
            current.pop_back();
            used_cycles.erase(it->second);
            visited[static_cast<std::size_t>(w)] = 0;
        }
    };
    extend();
    if (best.size() < 2) throw InternalContradiction("proper mosaic root has no cycle edge");

    int last = best.back();
    int before = best[best.size() - 2];
    int cycle = cycle_of.at(key(before, last));
    int other = -1;
    for (int w : h.neighbors(before))
        if (w != last && cycle_of.contains(key(before, w)) && cycle_of.at(key(before, w)) == cycle) other = w;
    if (other < 0) throw InternalContradiction("cycle through the last path edge not found");

    TwoThreePath p;
    p.root_path.vertices.assign(best.begin(), best.end() - 1);
    if (h.degree(last) == 2 && h.degree(other) == 3) {
        p.degree_two = last;
        p.degree_three = other;
    } else if (h.degree(last) == 3 && h.degree(other) == 2) {
        p.degree_two = other;
        p.degree_three = last;
    } else {
        throw InternalContradiction("end vertices " + std::to_string(last) + " and " + std::to_string(other) +
                                    " do not have degrees 2 and 3");
    }
    auto check = verify_23path(h, root, p);
    if (!check.ok()) throw InternalContradiction("constructed 2,3-path fails verification: " + check.summary());
    return p;
}

std::optional<Shortcut> find_shortcut(const Graph& h, int root) {
    std::vector<int> odd;
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) >= 3 && h.degree(v) % 2 == 1) odd.push_back(v);
    std::optional<Shortcut> best;
    for (std::size_t a = 0; a < odd.size(); ++a)
        for (std::size_t b = a + 1; b < odd.size(); ++b) {
            auto p = unique_path(h, odd[a], odd[b]);
            if (!p || p->contains(root)) continue;
            if (!best || p->length() < best->path.length()) best = Shortcut{odd[a], odd[b], *p};
        }
    return best;
}

namespace {

// Simple paths of exactly `length` edges from `from` to `to` avoiding `banned`.
std::vector<std::vector<int>> paths_of_length(const Graph& h, int from, int to, int length,
                                              const std::vector<char>& banned) {
    std::vector<std::vector<int>> out;
    // Distances to `to` in the graph without the banned vertices, for pruning.
    std::vector<int> dist(static_cast<std::size_t>(h.order()), kInfiniteDistance);
    std::vector<int> queue = {to};
    dist[static_cast<std::size_t>(to)] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int v = queue[q];
        for (int w : h.neighbors(v))
            if (!banned[static_cast<std::size_t>(w)] && dist[static_cast<std::size_t>(w)] == kInfiniteDistance) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    std::vector<int> current = {from};
    std::vector<char> on_path(static_cast<std::size_t>(h.order()), 0);
    on_path[static_cast<std::size_t>(from)] = 1;
    std::function<void()> go = [&]() {
        int v = current.back();
        int used = static_cast<int>(current.size()) - 1;
        if (v == to) {
            if (used == length) out.push_back(current);
            return;
        }
        for (int w : h.neighbors(v)) {
            if (banned[static_cast<std::size_t>(w)] || on_path[static_cast<std::size_t>(w)]) continue;
            if (used + 1 + dist[static_cast<std::size_t>(w)] > length) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            current.push_back(w);
            go();
            current.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    if (!banned[static_cast<std::size_t>(from)] && !banned[static_cast<std::size_t>(to)]) go();
    return out;
}

}  // namespace

TWalkPartition t_walk_partition(const Graph& h, const Path& p) {
    if (!is_path_in(h, p) || p.vertices.empty()) throw PreconditionError("not a path of the graph");
    if (p.length() > 12) throw PreconditionError("path longer than 12");
    if (!is_cactus(h)) throw PreconditionError("graph is not a cactus");
    auto shortest = unique_path(h, p.front(), p.back());
    if (!shortest || *shortest != p) throw PreconditionError("path is not the unique shortest path between its ends");

    const auto& xs = p.vertices;
    const int l = p.length();
    auto x = [&](int a) { return xs[static_cast<std::size_t>(a - 1)]; };
    // Detour paths from x_a to x_b of the given length avoiding x_{a+1..b-1}.
    auto detours = [&](int a, int b, int length) {
        std::vector<char> banned(static_cast<std::size_t>(h.order()), 0);
        for (int c = a + 1; c < b; ++c) banned[static_cast<std::size_t>(x(c))] = 1;
        return paths_of_length(h, x(a), x(b), length, banned);
    };
    auto append_segment = [&](Walk& w, int from, int to) {
        for (int c = from; c <= to; ++c) w.push_back(x(c));
    };

    TWalkPartition out;
    for (int a = 1; a <= l; ++a)
        for (int b = a + 1; b <= l + 1; ++b)
            for (const auto& d : detours(a, b, b - a + 2)) {
                Walk w;
                append_segment(w, 1, a - 1);
                w.insert(w.end(), d.begin(), d.end());
                append_segment(w, b + 1, l + 1);
                out.long_way.push_back(std::move(w));
            }
    for (int a = 1; a <= l; ++a)
        for (int b = a + 1; b <= l; ++b) {
            auto first = detours(a, b, b - a + 1);
            if (first.empty()) continue;
            for (int a2 = b; a2 <= l; ++a2)
                for (int b2 = a2 + 1; b2 <= l + 1; ++b2) {
                    auto second = detours(a2, b2, b2 - a2 + 1);
                    for (const auto& d1 : first)
                        for (const auto& d2 : second) {
                            Walk w;
                            append_segment(w, 1, a - 1);
                            w.insert(w.end(), d1.begin(), d1.end());
                            append_segment(w, b + 1, a2);
                            w.insert(w.end(), d2.begin() + 1, d2.end());
                            append_segment(w, b2 + 1, l + 1);
                            out.paired_odd_detours.push_back(std::move(w));
                        }
                }
        }
    for (int a = 1; a <= l + 1; ++a)
        for (int z : h.neighbors(x(a))) {
            // Stepping back onto the path is listed from the previous vertex.
            if (a > 1 && z == x(a - 1)) continue;
            Walk w;
            append_segment(w, 1, a);
            w.push_back(z);
            append_segment(w, a, l + 1);
            out.edge_repeats.push_back(std::move(w));
        }
    return out;
}

}  // namespace parhom
