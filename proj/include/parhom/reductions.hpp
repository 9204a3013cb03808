#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parhom/automorphism.hpp"
#include "parhom/gadgets.hpp"
#include "parhom/graph.hpp"
#include "parhom/homcount.hpp"

namespace parhom {

enum class VertexRoleKind { host, source, edge, path_internal };

/// What a vertex of the built graph stands for. `index` is the host vertex,
/// the source vertex, the source edge (in Graph::edges() order) or the path
/// number (target paths first, then anchor paths) respectively.
struct VertexRole {
    VertexRoleKind kind = VertexRoleKind::host;
    int index = 0;

    bool operator==(const VertexRole&) const = default;
};

const char* to_string(VertexRoleKind kind);

/// The source graph with the gadget attached: host copy on ids 0..|H|-1, then
/// source vertices, then one vertex per source edge, then path internals.
struct ReductionInstance {
    Graph graph;
    /// Every host vertex pinned to its own automorphism orbit.
    PinningFunction pin;
    std::vector<VertexRole> roles;
    Graph source;
    Graph host;
    HardnessGadget gadget;

    int host_offset() const { return 0; }
    int source_offset() const { return host.order(); }
    int edge_offset() const { return host.order() + source.order(); }
};

/// Vertex count the construction must produce.
std::size_t expected_order(const Graph& source, const Graph& host, const HardnessGadget& gadget);

/// Throws PreconditionError when the gadget fails verification in `host`.
ReductionInstance build_g_gamma(const Graph& source, const Graph& host, const HardnessGadget& gadget);

struct ReductionCheck {
    /// Parity of the weighted independent-set sum with weights 1 and |O|.
    bool source_parity = false;
    /// Parity of the pinned homomorphism count of the built instance.
    bool pinned_parity = false;
    std::size_t instance_order = 0;

    bool ok() const { return source_parity == pinned_parity; }
};

/// Computes both sides independently. Budget overruns propagate as
/// BudgetError.
ReductionCheck verify_reduction(const Graph& source, const Graph& host, const HardnessGadget& gadget,
                                const CountBudget& budget = {});

struct AutFactorReport {
    std::size_t automorphism_count = 0;
    /// Orbit-preserving endomorphisms of the host that are not automorphisms
    /// yet have pinned homomorphisms restricting to them.
    std::vector<Permutation> stray_restrictions;
    /// Number of pinned homomorphisms restricting to each automorphism, in
    /// automorphisms() order.
    std::vector<BigNat> bucket_sizes;

    bool ok() const;
};

/// Buckets the pinned homomorphisms by their restriction to the host copy.
/// Small hosts only: enumerates orbit-preserving endomorphisms.
AutFactorReport aut_factor_check(const Graph& host, const ReductionInstance& instance,
                                 const CountBudget& budget = {});

enum class Verdict { polynomial_time, parity_p_complete };

const char* to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::polynomial_time;
    ReductionTrace reduction;
    /// For hard inputs: a gadget in one component of the reduced graph,
    /// written in input vertex ids.
    std::optional<HardnessGadget> witness;
    /// Input ids of that component.
    std::vector<int> witness_component;
};

/// Requires every edge on at most one cycle; connectivity is not required.
Classification classify(const Graph& h, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace parhom
