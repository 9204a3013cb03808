#include <algorithm>
#include <bit>
#include <set>

#include "gadget_internal.hpp"
#include "parhom/automorphism.hpp"
#include "parhom/errors.hpp"
#include "parhom/parity.hpp"

namespace parhom {

namespace {

using detail::note;

RootedStructure lift(const RootedStructure& r, const std::vector<int>& to_host) {
    if (auto g = std::get_if<HardnessGadget>(&r)) return map_gadget(*g, to_host);
    if (auto p = std::get_if<PartialHardnessGadget>(&r)) return map_partial(*p, to_host);
    return map_mosaic(std::get<MosaicCertificate>(r), to_host);
}

std::vector<char> cycle_vertices(const Graph& h) {
    std::vector<char> on(static_cast<std::size_t>(h.order()), 0);
    for (const auto& c : cycles(h))
        for (int v : c) on[static_cast<std::size_t>(v)] = 1;
    return on;
}

bool has_cycle(const Graph& g) { return g.size() >= static_cast<std::size_t>(g.order()); }

// A cycle reached from x by a path meeting cycles only at its end, listed
// from that end towards its smaller cycle neighbour.
std::vector<int> nearest_cycle(const Graph& h, int x) {
    auto on = cycle_vertices(h);
    std::vector<int> dist(static_cast<std::size_t>(h.order()), kInfiniteDistance);
    std::vector<int> queue = {x};
    dist[static_cast<std::size_t>(x)] = 0;
    int entry = -1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int v = queue[q];
        if (on[static_cast<std::size_t>(v)]) {
            if (entry < 0 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(entry)] ||
                (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(entry)] && v < entry))
                entry = v;
            continue;
        }
        for (int w : h.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] == kInfiniteDistance) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    if (entry < 0) throw InternalContradiction("no cycle reachable from the root");
    for (const auto& c : cycles(h)) {
        auto at = std::find(c.begin(), c.end(), entry);
        if (at == c.end()) continue;
        std::vector<int> out(at, c.end());
        out.insert(out.end(), c.begin(), at);
        if (out.size() > 2 && out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
        return out;
    }
    throw InternalContradiction("cycle vertex on no cycle");
}

bool is_cycle_separating(const Graph& h, int x) {
    auto bd = blocks(h);
    if (std::find(bd.cut_vertices.begin(), bd.cut_vertices.end(), x) == bd.cut_vertices.end()) return false;
    int with_cycles = 0;
    for (const auto& c : split_at(h, x).components)
        if (has_cycle(c.graph)) ++with_cycles;
    return with_cycles >= 2;
}

RootedStructure shortcut_free_or_gadget(const Graph& h, int x, FinderTrace* trace) {
    auto cert = classify_mosaic(h, x);
    if (cert.verdict == MosaicVerdict::not_mosaic)
        throw InternalContradiction("expected a mosaic: " + cert.reason);
    if (auto sc = find_shortcut(h, x)) {
        note(trace, "shortcut mosaic");
        return gadget_from_shortcut(h, sc->path);
    }
    note(trace, "shortcut-free mosaic");
    return cert;
}

RootedStructure rooted(const Graph& h, int x, FinderTrace* trace);

RootedStructure rooted_on_cycle(const Graph& h, int x, FinderTrace* trace) {
    auto cycle = nearest_cycle(h, x);
    const int l = static_cast<int>(cycle.size());
    auto comps = detail::cycle_components(h, cycle);
    auto X = [&](int j) { return cycle[static_cast<std::size_t>(j - 1)]; };
    auto in_family = [&](int j) { return j != 1 && !(l % 2 == 0 && j == l / 2 + 1); };

    std::vector<RootedStructure> results(static_cast<std::size_t>(l + 1));
    for (int j = 2; j <= l; ++j) {
        auto sub = induced_subgraph(h, comps[static_cast<std::size_t>(j - 1)]);
        results[static_cast<std::size_t>(j)] = lift(rooted(sub.graph, sub.local(X(j)), nullptr), sub.to_host);
    }
    for (int j = 2; j <= l; ++j)
        if (std::holds_alternative<HardnessGadget>(results[static_cast<std::size_t>(j)])) {
            note(trace, "gadget in the component at cycle position " + std::to_string(j));
            return results[static_cast<std::size_t>(j)];
        }
    for (int j = 2; j <= l; ++j) {
        if (!in_family(j)) continue;
        if (auto p = std::get_if<PartialHardnessGadget>(&results[static_cast<std::size_t>(j)])) {
            auto lead = unique_path(h, x, X(j));
            if (!lead) throw InternalContradiction("no unique path to a cycle vertex");
            PartialHardnessGadget out = *p;
            out.root_path.vertices = lead->vertices;
            out.root_path.vertices.insert(out.root_path.vertices.end(), p->root_path.vertices.begin() + 1,
                                          p->root_path.vertices.end());
            note(trace, "partial gadget in the component at cycle position " + std::to_string(j));
            return out;
        }
    }
    if (l != 4) {
        note(trace, "cycle of length " + std::to_string(l));
        return gadget_cycles(h, cycle, trace);
    }

    if (auto partial = std::get_if<PartialHardnessGadget>(&results[3])) {
        for (int j : {2, 4}) {
            const auto& cert = std::get<MosaicCertificate>(results[static_cast<std::size_t>(j)]);
            if (cert.verdict != MosaicVerdict::proper_mosaic) continue;
            auto sub = induced_subgraph(h, comps[static_cast<std::size_t>(j - 1)]);
            auto tp = map_23path(find_23path(sub.graph, sub.local(X(j))), sub.to_host);
            tp.root_path.vertices.insert(tp.root_path.vertices.begin(), X(3));
            note(trace, "square: partial gadget opposite, 2,3-path beside");
            return gadget_phg_23path(h, X(3), tp, *partial);
        }
        TwoThreePath tp;
        tp.root_path.vertices = {X(3)};
        for (int j : {2, 4}) {
            if (h.degree(X(j)) == 2) tp.degree_two = X(j);
            if (h.degree(X(j)) == 3) tp.degree_three = X(j);
        }
        if (tp.degree_two < 0 || tp.degree_three < 0)
            throw InternalContradiction("square neighbours of the partial gadget do not have degrees 2 and 3");
        note(trace, "square: partial gadget opposite, bare and bristled neighbours");
        return gadget_phg_23path(h, X(3), tp, *partial);
    }

    const int x1 = X(1);
    if (x != x1) {
        std::vector<int> mosaic = cycle;
        for (int j = 2; j <= 4; ++j)
            mosaic.insert(mosaic.end(), comps[static_cast<std::size_t>(j - 1)].begin(),
                          comps[static_cast<std::size_t>(j - 1)].end());
        std::sort(mosaic.begin(), mosaic.end());
        mosaic.erase(std::unique(mosaic.begin(), mosaic.end()), mosaic.end());
        if (h.degree(x1) % 2 == 1) {
            note(trace, "square mosaic hanging from an odd-degree vertex");
            return gadget_mosaic_oddroot(h, x1, mosaic);
        }
        auto lead = unique_path(h, x, x1);
        if (!lead) throw InternalContradiction("no unique path to the square");
        PartialHardnessGadget p;
        p.hub = x1;
        p.root_path.vertices.assign(lead->vertices.begin(), lead->vertices.end() - 1);
        p.selector = p.root_path.back();
        for (int w : h.neighbors(x1))
            if (w != p.selector) p.outs.push_back(w);
        note(trace, "square mosaic hanging from an even-degree vertex");
        return p;
    }
    auto bd = blocks(h);
    if (std::find(bd.cut_vertices.begin(), bd.cut_vertices.end(), x) != bd.cut_vertices.end())
        for (const auto& c : split_at(h, x).components)
            if (!has_cycle(c.graph) && c.graph.order() >= 3) {
                note(trace, "tree beside the root square");
                return map_partial(partial_gadget_tree(c.graph, c.local(x)), c.to_host);
            }
    return shortcut_free_or_gadget(h, x, trace);
}

RootedStructure rooted(const Graph& h, int x, FinderTrace* trace) {
    if (!has_cycle(h)) {
        if (h.order() <= 2) {
            note(trace, "single vertex or edge");
            return classify_mosaic(h, x);
        }
        note(trace, "tree");
        return partial_gadget_tree(h, x);
    }
    if (is_cycle_separating(h, x)) {
        auto split = split_at(h, x);
        std::vector<RootedStructure> results;
        for (const auto& c : split.components) results.push_back(lift(rooted(c.graph, c.local(x), nullptr), c.to_host));
        for (const auto& r : results)
            if (std::holds_alternative<HardnessGadget>(r)) {
                note(trace, "gadget below a cycle-separating root");
                return r;
            }
        for (const auto& r : results)
            if (std::holds_alternative<PartialHardnessGadget>(r)) {
                note(trace, "partial gadget below a cycle-separating root");
                return r;
            }
        return shortcut_free_or_gadget(h, x, trace);
    }
    return rooted_on_cycle(h, x, trace);
}

void require_outcome(const Graph& h, int x, const RootedStructure& r) {
    if (auto g = std::get_if<HardnessGadget>(&r)) {
        detail::require_valid(h, *g, {x}, "rooted search");
    } else if (auto p = std::get_if<PartialHardnessGadget>(&r)) {
        auto check = verify_partial_gadget(h, x, *p);
        if (!check.ok()) throw InternalContradiction("rooted search produced an invalid partial gadget: " + check.summary());
    } else {
        const auto& m = std::get<MosaicCertificate>(r);
        if (m.verdict == MosaicVerdict::not_mosaic || classify_mosaic(h, x).verdict != m.verdict)
            throw InternalContradiction("rooted search produced a wrong mosaic certificate");
        if (find_shortcut(h, x)) throw InternalContradiction("rooted search returned a mosaic with a shortcut");
    }
}

void require_cactus(const Graph& h) {
    if (auto e = cactus_violation(h))
        throw PreconditionError("not a cactus: edge " + std::to_string(e->first) + "-" + std::to_string(e->second) +
                                " lies on two cycles");
    if (!is_connected(h)) throw PreconditionError("graph is disconnected");
}

}  // namespace

RootedStructure find_structure_rooted(const Graph& h, int root, FinderTrace* trace) {
    if (root < 0 || root >= h.order()) throw PreconditionError("root not in graph");
    require_cactus(h);
    std::vector<int> fixed = {root};
    if (find_involution(h, fixed)) throw PreconditionError("rooted graph has an involution");
    auto r = rooted(h, root, trace);
    require_outcome(h, root, r);
    return r;
}

HardnessGadget find_hardness_gadget(const Graph& h, FinderTrace* trace) {
    if (h.order() < 2) throw PreconditionError("graph needs at least two vertices");
    require_cactus(h);
    if (find_involution(h)) throw PreconditionError("graph has an involution");

    auto bd = blocks(h);
    if (bd.cut_vertices.empty()) throw InternalContradiction("involution-free graph without a cut vertex");
    int x = -1;
    std::size_t best = 0;
    for (int v : bd.cut_vertices) {
        std::vector<std::size_t> sizes;
        for (const auto& c : split_at(h, v).components) sizes.push_back(c.to_host.size());
        std::sort(sizes.rbegin(), sizes.rend());
        if (x < 0 || sizes[1] > best || (sizes[1] == best && v < x)) {
            x = v;
            best = sizes[1];
        }
    }
    note(trace, "split at " + std::to_string(x));
    auto split = split_at(h, x);
    std::stable_sort(split.components.begin(), split.components.end(),
                     [](const Subgraph& a, const Subgraph& b) { return a.to_host.size() > b.to_host.size(); });
    std::vector<RootedStructure> results;
    for (const auto& c : split.components) results.push_back(lift(rooted(c.graph, c.local(x), nullptr), c.to_host));

    auto finish = [&](HardnessGadget g, const char* what) {
        note(trace, what);
        auto check = verify_hardness_gadget(h, g);
        if (!check.ok()) throw InternalContradiction("gadget search produced an invalid gadget: " + check.summary());
        return normalized(g);
    };
    for (const auto& r : results)
        if (auto g = std::get_if<HardnessGadget>(&r)) return finish(*g, "gadget inside a component");

    if (best > 2) {
        const auto& a = results[0];
        const auto& b = results[1];
        auto pa = std::get_if<PartialHardnessGadget>(&a);
        auto pb = std::get_if<PartialHardnessGadget>(&b);
        if (pa && pb) return finish(gadget_phg_phg(h, x, *pa, *pb), "two partial gadgets");
        if (!pa && !pb)
            return finish(gadget_mosaic_mosaic(h, x, split.components[0].to_host, split.components[1].to_host),
                          "two proper mosaics");
        const auto& partial = pa ? *pa : *pb;
        const auto& side = pa ? split.components[1] : split.components[0];
        auto tp = map_23path(find_23path(side.graph, side.local(x)), side.to_host);
        return finish(gadget_phg_23path(h, x, tp, partial), "partial gadget and proper mosaic");
    }

    auto cs = cycles(h);
    if (cs.size() != 1) throw InternalContradiction("small split without a single cycle");
    auto cycle = cs[0];
    auto at = std::find(cycle.begin(), cycle.end(), x);
    if (at == cycle.end()) throw InternalContradiction("split vertex is off the cycle");
    std::vector<int> from_x(at, cycle.end());
    from_x.insert(from_x.end(), cycle.begin(), at);
    if (from_x.back() < from_x[1]) std::reverse(from_x.begin() + 1, from_x.end());
    return finish(gadget_cycles(h, from_x, trace), "single cycle");
}

GadgetSearchBounds default_search_bounds(const Graph& h) {
    int diameter = 0;
    for (int v = 0; v < h.order(); ++v)
        for (int d : bfs_distances(h, v))
            if (d != kInfiniteDistance) diameter = std::max(diameter, d);
    return {diameter + 2, 2 * diameter + 2};
}

std::size_t for_each_gadget(const Graph& h, GadgetSearchBounds bounds,
                            const std::function<bool(const HardnessGadget&)>& visit) {
    const int n = h.order();
    WalkParity parity(h);
    const int top = std::max(bounds.beta_max + 1, bounds.k_max);
    std::vector<GF2Matrix> power(static_cast<std::size_t>(top + 1));
    for (int k = 1; k <= top; ++k) power[static_cast<std::size_t>(k)] = parity.power(k);
    auto odd = [&](int u, int v, int k) { return power[static_cast<std::size_t>(k)].get(u, v); };

    std::size_t visited = 0;
    bool stop = false;
    for (int s = 0; s < n && !stop; ++s) {
        std::vector<int> nbrs(h.neighbors(s).begin(), h.neighbors(s).end());
        if (nbrs.size() > 20) throw BudgetError("vertex degree too large for gadget search");
        for (int i : nbrs) {
            if (stop) break;
            std::vector<int> rest;
            for (int v : nbrs)
                if (v != i) rest.push_back(v);
            const int r = static_cast<int>(rest.size());
            for (int t = 0; t < n && !stop; ++t)
                for (int beta = 1; beta <= bounds.beta_max && !stop; ++beta) {
                    if (odd(i, t, beta + 1)) continue;
                    // good[a][b]: s is the only common neighbour of rest[a] and
                    // rest[b] (b == r means i) with odd beta-walks to t.
                    auto hub_only = [&](int a, int b) {
                        bool hub = false;
                        for (int z : h.neighbors(a))
                            if (h.adjacent(z, b) && odd(z, t, beta)) {
                                if (z != s) return false;
                                hub = true;
                            }
                        return hub;
                    };
                    std::vector<std::vector<char>> good(static_cast<std::size_t>(r),
                                                        std::vector<char>(static_cast<std::size_t>(r + 1)));
                    for (int a = 0; a < r; ++a) {
                        for (int b = 0; b < r; ++b)
                            good[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                                hub_only(rest[static_cast<std::size_t>(a)], rest[static_cast<std::size_t>(b)]);
                        good[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)] =
                            hub_only(rest[static_cast<std::size_t>(a)], i);
                    }
                    for (std::uint32_t mask = 1; mask < (1U << r) && !stop; ++mask) {
                        if (std::popcount(mask) % 2 == 0) continue;
                        bool ok = true;
                        for (int a = 0; a < r && ok; ++a) {
                            if (!(mask >> a & 1U)) continue;
                            if (!good[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)]) ok = false;
                            for (int b = 0; b < r && ok; ++b)
                                if ((mask >> b & 1U) && !good[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                                    ok = false;
                        }
                        if (!ok) continue;
                        HardnessGadget g;
                        g.beta = beta;
                        g.hub = s;
                        g.target = t;
                        g.selector = i;
                        std::vector<int> ys = {i};
                        for (int a = 0; a < r; ++a)
                            (mask >> a & 1U ? g.outs : g.cancelled).push_back(rest[static_cast<std::size_t>(a)]);
                        ys.insert(ys.end(), g.outs.begin(), g.outs.end());
                        std::vector<std::vector<std::pair<int, int>>> options;
                        for (int u : g.cancelled) {
                            std::vector<std::pair<int, int>> opts;
                            for (int k = 1; k <= bounds.k_max; ++k)
                                for (int w = 0; w < n; ++w) {
                                    if (odd(w, u, k)) continue;
                                    bool all = true;
                                    for (int y : ys) all = all && odd(w, y, k);
                                    if (all) opts.emplace_back(w, k);
                                }
                            if (opts.empty()) {
                                ok = false;
                                break;
                            }
                            options.push_back(std::move(opts));
                        }
                        if (!ok) continue;
                        std::vector<std::size_t> pick(options.size(), 0);
                        while (!stop) {
                            for (std::size_t c = 0; c < options.size(); ++c) {
                                auto [w, k] = options[c][pick[c]];
                                g.anchor[g.cancelled[c]] = w;
                                g.walk_length[g.cancelled[c]] = k;
                            }
                            ++visited;
                            if (!visit(g)) stop = true;
                            std::size_t c = 0;
                            while (c < options.size() && ++pick[c] == options[c].size()) pick[c++] = 0;
                            if (c == options.size()) break;
                        }
                    }
                }
        }
    }
    return visited;
}

std::vector<HardnessGadget> brute_force_gadget_search(const Graph& h, GadgetSearchBounds bounds,
                                                      std::size_t record_cap) {
    std::vector<HardnessGadget> out;
    for_each_gadget(h, bounds, [&](const HardnessGadget& g) {
        if (out.size() == record_cap)
            throw BudgetError("gadget search exceeds " + std::to_string(record_cap) + " records");
        out.push_back(g);
        return true;
    });
    return out;
}

}  // namespace parhom
