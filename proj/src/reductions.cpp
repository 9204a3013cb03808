#include "parhom/reductions.hpp"

#include <algorithm>

#include "parhom/errors.hpp"

namespace parhom {

const char* to_string(VertexRoleKind kind) {
    switch (kind) {
        case VertexRoleKind::host: return "host";
        case VertexRoleKind::source: return "source";
        case VertexRoleKind::edge: return "edge";
        case VertexRoleKind::path_internal: return "path";
    }
    return "?";
}

const char* to_string(Verdict v) {
    return v == Verdict::polynomial_time ? "PolynomialTime" : "ParityPComplete";
}

std::size_t expected_order(const Graph& source, const Graph& host, const HardnessGadget& gadget) {
    const std::size_t n = static_cast<std::size_t>(source.order());
    const std::size_t m = source.size();
    std::size_t anchor_internals = 0;
    for (int u : gadget.cancelled) anchor_internals += static_cast<std::size_t>(gadget.walk_length.at(u) - 1);
    return n + static_cast<std::size_t>(host.order()) + m + m * static_cast<std::size_t>(gadget.beta - 1) +
           n * anchor_internals;
}

ReductionInstance build_g_gamma(const Graph& source, const Graph& host, const HardnessGadget& gadget) {
    if (auto check = verify_hardness_gadget(host, gadget); !check.ok())
        throw PreconditionError("gadget does not verify: " + check.summary());

    ReductionInstance out;
    out.source = source;
    out.host = host;
    out.gadget = gadget;
    const auto source_edges = source.edges();
    const int hn = host.order();
    const int first_edge_vertex = hn + source.order();
    int next = first_edge_vertex + static_cast<int>(source_edges.size());

    std::vector<Edge> edges = host.edges();
    for (int v = 0; v < hn; ++v) out.roles.push_back({VertexRoleKind::host, v});
    for (int x = 0; x < source.order(); ++x) {
        out.roles.push_back({VertexRoleKind::source, x});
        edges.emplace_back(hn + x, gadget.hub);
    }
    for (std::size_t e = 0; e < source_edges.size(); ++e) {
        const int ve = first_edge_vertex + static_cast<int>(e);
        out.roles.push_back({VertexRoleKind::edge, static_cast<int>(e)});
        edges.emplace_back(hn + source_edges[e].first, ve);
        edges.emplace_back(hn + source_edges[e].second, ve);
    }

    int path_number = 0;
    auto add_path = [&](int from, int to, int length) {
        int prev = from;
        for (int step = 1; step < length; ++step) {
            out.roles.push_back({VertexRoleKind::path_internal, path_number});
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, to);
        ++path_number;
    };
    for (std::size_t e = 0; e < source_edges.size(); ++e)
        add_path(gadget.target, first_edge_vertex + static_cast<int>(e), gadget.beta);
    std::vector<int> cancelled = gadget.cancelled;
    std::sort(cancelled.begin(), cancelled.end());
    for (int x = 0; x < source.order(); ++x)
        for (int u : cancelled) add_path(hn + x, gadget.anchor.at(u), gadget.walk_length.at(u));

    // A one-edge anchor path onto the hub repeats the hub edge; Graph
    // collapses it.
    out.graph = Graph::from_edges(next, edges);
    auto orb = orbits(host);
    for (const auto& o : orb)
        for (int v : o) out.pin.restrict(v, o);

    if (static_cast<std::size_t>(out.graph.order()) != expected_order(source, host, gadget))
        throw InternalContradiction("built graph has the wrong order");
    return out;
}

ReductionCheck verify_reduction(const Graph& source, const Graph& host, const HardnessGadget& gadget,
                                const CountBudget& budget) {
    auto instance = build_g_gamma(source, host, gadget);
    ReductionCheck out;
    out.instance_order = static_cast<std::size_t>(instance.graph.order());
    out.source_parity = z_general_is(source, 1, gadget.outs.size());
    out.pinned_parity = count_pinned_homs_mod2(instance.graph, host, instance.pin, budget);
    return out;
}

bool AutFactorReport::ok() const {
    if (!stray_restrictions.empty()) return false;
    return std::adjacent_find(bucket_sizes.begin(), bucket_sizes.end(), std::not_equal_to<>()) ==
           bucket_sizes.end();
}

AutFactorReport aut_factor_check(const Graph& host, const ReductionInstance& instance, const CountBudget& budget) {
    if (!(instance.host == host)) throw PreconditionError("instance was built for a different graph");
    AutFactorReport out;
    auto autos = automorphisms(host);
    out.automorphism_count = autos.size();
    out.bucket_sizes.assign(autos.size(), BigNat(0));

    auto bucket = [&](const std::vector<int>& restriction) {
        PinningFunction pin = instance.pin;
        for (int v = 0; v < host.order(); ++v) pin.restrict(v, {restriction[static_cast<std::size_t>(v)]});
        return count_pinned_homs(instance.graph, host, pin, budget);
    };
    for (const auto& rho : orbit_preserving_endomorphisms(host, std::max(host.order(), kDefaultEndomorphismVertexCap))) {
        auto count = bucket(rho);
        auto it = std::find(autos.begin(), autos.end(), rho);
        if (it != autos.end())
            out.bucket_sizes[static_cast<std::size_t>(it - autos.begin())] = count;
        else if (count != 0)
            out.stray_restrictions.push_back(rho);
    }
    return out;
}

Classification classify(const Graph& h, std::optional<std::uint64_t> seed) {
    if (auto bad = cactus_violation(h))
        throw PreconditionError("edge " + std::to_string(bad->first) + "-" + std::to_string(bad->second) +
                                " lies on more than one cycle");
    Classification out;
    out.reduction = involution_free_reduction(h, seed);
    const Graph& reduced = out.reduction.final_graph;
    if (reduced.order() <= 1) return out;

    out.verdict = Verdict::parity_p_complete;
    for (const auto& comp : connected_components(reduced)) {
        if (comp.size() < 2) continue;
        auto sub = induced_subgraph(reduced, comp);
        std::vector<int> to_input;
        for (int v : sub.to_host) to_input.push_back(out.reduction.final_to_original[static_cast<std::size_t>(v)]);
        out.witness = map_gadget(find_hardness_gadget(sub.graph), to_input);
        out.witness_component = to_input;
        std::sort(out.witness_component.begin(), out.witness_component.end());
        break;
    }
    return out;
}

}  // namespace parhom
