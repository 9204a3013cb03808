#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parhom/graph.hpp"

namespace parhom {

/// A hardness gadget (beta, s, t, O, i, K, k, w). The hub s has its
/// neighbourhood split into the outer set O, the selector i and the cancelled
/// set K; every u in K carries a walk length k(u) and an anchor w(u).
struct HardnessGadget {
    int beta = 1;
    int hub = -1;
    int target = -1;
    int selector = -1;
    std::vector<int> outs;
    std::vector<int> cancelled;
    std::map<int, int> walk_length;
    std::map<int, int> anchor;

    bool operator==(const HardnessGadget&) const = default;
};

/// (s, i, O, P) in a rooted graph: P runs from the root to i.
struct PartialHardnessGadget {
    int hub = -1;
    int selector = -1;
    std::vector<int> outs;
    Path root_path;

    bool operator==(const PartialHardnessGadget&) const = default;
};

enum class MosaicVerdict { not_mosaic, mosaic, proper_mosaic };

struct MosaicCertificate {
    MosaicVerdict verdict = MosaicVerdict::not_mosaic;
    std::vector<int> core;
    std::vector<int> bristle_vertices;
    std::vector<Edge> bristles;
    /// Why the graph is not a mosaic, when it is not.
    std::string reason;

    bool operator==(const MosaicCertificate&) const = default;
};

/// (P, v2, v3): P runs from the root to the common cycle neighbour of v2 and
/// v3, which have degrees 2 and 3.
struct TwoThreePath {
    Path root_path;
    int degree_two = -1;
    int degree_three = -1;

    bool operator==(const TwoThreePath&) const = default;
};

struct Shortcut {
    int first = -1;
    int second = -1;
    Path path;

    bool operator==(const Shortcut&) const = default;
};

using Walk = std::vector<int>;

/// The (l+2)-walks along a unique shortest path of length l, split into long
/// detours round one even cycle, paired detours round two odd cycles, and
/// walks that repeat a single edge.
struct TWalkPartition {
    std::vector<Walk> long_way;
    std::vector<Walk> paired_odd_detours;
    std::vector<Walk> edge_repeats;

    std::size_t total() const { return long_way.size() + paired_odd_detours.size() + edge_repeats.size(); }
};

struct Violation {
    std::string clause;
    std::string detail;
};

struct CheckResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// ---- verification -------------------------------------------------------

CheckResult verify_hardness_gadget(const Graph& h, const HardnessGadget& g);
CheckResult check_distance_requirements(const Graph& h, const HardnessGadget& g, int v);
/// Distance requirements for every vertex of `vertices`.
CheckResult check_distance_requirements(const Graph& h, const HardnessGadget& g, const std::vector<int>& vertices);
CheckResult verify_partial_gadget(const Graph& h, int root, const PartialHardnessGadget& p);
CheckResult verify_23path(const Graph& h, int root, const TwoThreePath& p);
CheckResult verify_shortcut(const Graph& h, int root, const Shortcut& s);

// ---- mosaics -------------------------------------------------------------

MosaicCertificate classify_mosaic(const Graph& h, int root);
/// Requires an involution-free proper mosaic; throws PreconditionError
/// otherwise.
TwoThreePath find_23path(const Graph& h, int root);
/// Shortest shortcut, ties broken by the smaller endpoint pair.
std::optional<Shortcut> find_shortcut(const Graph& h, int root);
/// Requires p to be the unique shortest path between its ends in a cactus,
/// with length at most 12.
TWalkPartition t_walk_partition(const Graph& h, const Path& p);

// ---- constructions -------------------------------------------------------

/// Which construction produced a result, outermost first.
using FinderTrace = std::vector<std::string>;

/// Gadget from two odd-degree vertices joined by a unique shortest path whose
/// edges lie on distinct 4-cycles. The hub is path.back(); the far end is
/// moved along the path to the first odd-degree vertex, so the distance
/// requirements hold for every vertex off the path and for the hub.
HardnessGadget gadget_from_shortcut(const Graph& h, const Path& path);

/// Two proper-mosaic components meeting at cut vertex x. Components are
/// given as host vertex sets including x.
HardnessGadget gadget_mosaic_mosaic(const Graph& h, int x, const std::vector<int>& first,
                                    const std::vector<int>& second);
/// Odd-degree cut vertex x with an involution-free proper-mosaic component.
HardnessGadget gadget_mosaic_oddroot(const Graph& h, int x, const std::vector<int>& component);
/// 2,3-path on one side of x, partial gadget on another, both rooted at x.
HardnessGadget gadget_phg_23path(const Graph& h, int x, const TwoThreePath& path,
                                 const PartialHardnessGadget& partial);
/// Partial gadgets on two sides of x.
HardnessGadget gadget_phg_phg(const Graph& h, int x, const PartialHardnessGadget& first,
                              const PartialHardnessGadget& second);
/// Cycle of length other than 4 listed from x1 = cycle.front(), whose hanging
/// components away from x1 are mosaics. The gadget satisfies the distance
/// requirements for the component hanging from x1.
HardnessGadget gadget_cycles(const Graph& h, const std::vector<int>& cycle, FinderTrace* trace = nullptr);

/// Involution-free rooted tree with at least three vertices.
PartialHardnessGadget partial_gadget_tree(const Graph& h, int root);

using RootedStructure = std::variant<HardnessGadget, PartialHardnessGadget, MosaicCertificate>;

/// For a connected, involution-free rooted cactus: a gadget satisfying the
/// distance requirements for the root, a partial gadget, or a shortcut-free
/// mosaic certificate.
RootedStructure find_structure_rooted(const Graph& h, int root, FinderTrace* trace = nullptr);

/// For an involution-free cactus with at least two vertices.
HardnessGadget find_hardness_gadget(const Graph& h, FinderTrace* trace = nullptr);

struct GadgetSearchBounds {
    int beta_max = 1;
    int k_max = 1;
};

/// Search bounds derived from the diameter: beta <= diam + 2, k <= 2 diam + 2.
GadgetSearchBounds default_search_bounds(const Graph& h);

/// Visits every gadget within the bounds; stops when the visitor returns
/// false. Returns the number visited.
std::size_t for_each_gadget(const Graph& h, GadgetSearchBounds bounds,
                            const std::function<bool(const HardnessGadget&)>& visit);

inline constexpr std::size_t kDefaultGadgetRecordCap = 2'000'000;

/// All gadgets within the bounds; BudgetError past `record_cap` records.
std::vector<HardnessGadget> brute_force_gadget_search(const Graph& h, GadgetSearchBounds bounds,
                                                      std::size_t record_cap = kDefaultGadgetRecordCap);

// ---- relabelling and text form ------------------------------------------

HardnessGadget map_gadget(const HardnessGadget& g, const std::vector<int>& to_host);
PartialHardnessGadget map_partial(const PartialHardnessGadget& p, const std::vector<int>& to_host);
TwoThreePath map_23path(const TwoThreePath& p, const std::vector<int>& to_host);
MosaicCertificate map_mosaic(const MosaicCertificate& m, const std::vector<int>& to_host);
Path map_path(const Path& p, const std::vector<int>& to_host);

/// Sorted copies of the set fields, so equal gadgets compare equal.
HardnessGadget normalized(HardnessGadget g);

std::string serialize_gadget(const HardnessGadget& g);
HardnessGadget parse_gadget(std::string_view text);

const char* to_string(MosaicVerdict v);

}  // namespace parhom
