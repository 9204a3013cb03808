#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "parhom/graph.hpp"

namespace parhom {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

/// Tree with a center joined to pendant paths of lengths 1, 2 and 3. Vertex
/// 0 is the center; the legs are 0-1, 0-2-3 and 0-4-5-6.
Graph spider_tree();

/// Four 4-cycles glued in a square pattern with four bristles; the three
/// variants differ only in where the bristles sit.
Graph square_cactus_hard_a();
Graph square_cactus_easy();
Graph square_cactus_hard_b();

/// 9-cycle 0..8 with a pendant edge at 1, 4, 7 and a pendant 2-path at 2, 5,
/// 8. Its automorphism group is the rotation group of order 3.
Graph threefold_nine_cycle();

/// 12-cycle 0..11 with a pendant edge at 1, 4, 7, 10 and a pendant 2-path at
/// 2, 5, 8, 11.
Graph fourfold_twelve_cycle();

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// The named graphs above, for CLI lookup and reports.
std::vector<NamedGraph> named_graphs();
/// Throws PreconditionError for unknown names.
Graph named_graph(const std::string& name);

/// Every connected cactus on n vertices, one per isomorphism class.
std::vector<Graph> all_cacti(int n);

/// Connected cactus on n vertices grown by random leaf blocks.
Graph random_cactus(int n, std::mt19937_64& rng, int max_cycle = 8);
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace parhom
