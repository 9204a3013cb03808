#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "parhom/graph.hpp"

namespace parhom {

/// perm[v] is the image of v.
using Permutation = std::vector<int>;

inline constexpr int kDefaultAutomorphismVertexCap = 32;
inline constexpr std::size_t kDefaultAutomorphismGroupCap = 1'000'000;
inline constexpr int kDefaultEndomorphismVertexCap = 9;

bool is_automorphism(const Graph& g, std::span<const int> perm);
bool is_involution(const Graph& g, std::span<const int> perm);

/// The whole automorphism group, identity first, remaining elements in
/// lexicographic order. Throws BudgetError above either cap.
std::vector<Permutation> automorphisms(const Graph& g, int vertex_cap = kDefaultAutomorphismVertexCap,
                                       std::size_t group_cap = kDefaultAutomorphismGroupCap);

/// Lexicographically least involution fixing every vertex of `fixed`. With a
/// seed, candidate images are tried in a shuffled order instead, so some
/// involution is returned but not necessarily the least one.
std::optional<Permutation> find_involution(const Graph& g, std::span<const int> fixed = {},
                                           std::optional<std::uint64_t> seed = std::nullopt);

bool has_nontrivial_automorphism(const Graph& g, std::span<const int> fixed = {});

/// An isomorphism a -> b, lexicographically least.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Induced subgraph on the fixed points of `sigma`.
Subgraph fixed_subgraph(const Graph& g, std::span<const int> sigma);

struct ReductionStep {
    Graph graph;
    Permutation involution;
    Subgraph fixed;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Graph final_graph;
    /// Vertex of the input graph corresponding to each vertex of final_graph.
    std::vector<int> final_to_original;
};

ReductionTrace involution_free_reduction(const Graph& g, std::optional<std::uint64_t> seed = std::nullopt);

/// Orbit partition under Aut(g); orbits sorted by smallest member.
std::vector<std::vector<int>> orbits(const Graph& g);

/// For each vertex, the index of its orbit in orbits(g).
std::vector<int> orbit_index(const Graph& g);

/// True iff |Aut(g)| is odd, i.e. g has no involution.
bool aut_parity(const Graph& g);

/// Endomorphisms mapping every vertex into its own orbit, sorted.
std::vector<std::vector<int>> orbit_preserving_endomorphisms(const Graph& g,
                                                             int vertex_cap = kDefaultEndomorphismVertexCap);

enum class CenterKind { vertex, edge, cycle };

struct CenterStructure {
    CenterKind kind = CenterKind::vertex;
    /// Sorted; for a cycle, the vertices of the cycle.
    std::vector<int> vertices;
};

/// A vertex, edge or cycle that every automorphism maps onto itself. Requires
/// a connected cactus.
CenterStructure center_structure(const Graph& g);

/// For a cactus without involutions but with a non-trivial automorphism, the
/// cycle that every non-trivial automorphism rotates, in cycles() order.
/// std::nullopt when g is asymmetric.
std::optional<std::vector<int>> fixed_cycle(const Graph& g);

const char* to_string(CenterKind kind);

}  // namespace parhom
