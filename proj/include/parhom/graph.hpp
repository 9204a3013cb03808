#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace parhom {

using Edge = std::pair<int, int>;

/// Sentinel returned by the distance routines for unreachable targets. Small
/// enough that adding two of them does not overflow.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max() / 4;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints throw PreconditionError.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

struct RootedGraph {
    Graph graph;
    int root = 0;
};

/// A simple path, listed vertex by vertex.
struct Path {
    std::vector<int> vertices;

    int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    bool contains(int v) const;

    bool operator==(const Path&) const = default;
};

/// True when `p` is a path of `g`: consecutive vertices adjacent, no repeats.
bool is_path_in(const Graph& g, const Path& p);

/// An induced subgraph with the map back to host vertex ids. Local ids are
/// assigned in increasing host-id order.
struct Subgraph {
    Graph graph;
    std::vector<int> to_host;

    /// Local id of a host vertex, or -1 when absent.
    int local(int host) const;
};

Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

/// Applies a vertex relabeling: vertex v of `g` becomes `perm[v]`.
Graph relabel(const Graph& g, std::span<const int> perm);

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
std::string to_dot(const Graph& g, std::optional<int> root = std::nullopt);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct BlockDecomposition {
    /// Vertex sets of the biconnected blocks, each sorted. Every edge lies in
    /// exactly one block.
    std::vector<std::vector<int>> blocks;
    /// Edges of each block, parallel to `blocks`.
    std::vector<std::vector<Edge>> block_edges;
    std::vector<int> cut_vertices;
    /// Bipartite tree: nodes 0..blocks.size()-1 are blocks, the following
    /// nodes are the cut vertices in `cut_vertices` order.
    Graph block_cut_tree;
};

BlockDecomposition blocks(const Graph& g);

/// True iff every block is a single edge or a chordless cycle. Connectivity is
/// not checked.
bool is_cactus(const Graph& g);

/// An edge lying on more than one cycle, when the graph is not a cactus.
std::optional<Edge> cactus_violation(const Graph& g);

/// The cycles of a cactus graph, each listed in cyclic order starting from its
/// smallest vertex and continuing towards the smaller of its two cycle
/// neighbours. Sorted by starting vertex.
std::vector<std::vector<int>> cycles(const Graph& g);

struct Split {
    int cut_vertex = -1;
    /// One entry per component of g - v, each extended by v.
    std::vector<Subgraph> components;
};

/// Throws PreconditionError when v is not a cut vertex.
Split split_at(const Graph& g, int v);

struct NotUnique {
    bool operator==(const NotUnique&) const = default;
};
struct Unreachable {
    bool operator==(const Unreachable&) const = default;
};
using ShortestPath = std::variant<Path, NotUnique, Unreachable>;

ShortestPath unique_shortest_path(const Graph& g, int u, int v);

/// The unique shortest path, or std::nullopt when it is missing or tied.
std::optional<Path> unique_path(const Graph& g, int u, int v);

std::vector<int> bfs_distances(const Graph& g, int source);
int distance(const Graph& g, int u, int v);
int distance_to_set(const Graph& g, int u, std::span<const int> targets);

}  // namespace parhom
