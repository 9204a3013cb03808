#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parhom/graph.hpp"
#include "parhom/parity.hpp"

namespace parhom {

/// Allowed images per source vertex. Vertices without an entry may map
/// anywhere.
class PinningFunction {
public:
    PinningFunction() = default;

    void restrict(int source, std::vector<int> allowed);
    bool is_restricted(int source) const { return allowed_.count(source) != 0; }
    const std::map<int, std::vector<int>>& entries() const noexcept { return allowed_; }

    /// Per-vertex domains for a source graph of `source_order` vertices and a
    /// target of `target_order` vertices. Throws PreconditionError for
    /// out-of-range entries.
    std::vector<std::vector<int>> domains(int source_order, int target_order) const;

    bool operator==(const PinningFunction&) const = default;

private:
    std::map<int, std::vector<int>> allowed_;
};

/// Lines "v: h1 h2 ...". Blank lines and '#' comments are skipped.
PinningFunction parse_pinning(std::string_view text);
std::string serialize_pinning(const PinningFunction& p);

struct CountBudget {
    /// Largest product of domain sizes enumerated directly.
    double brute_force_assignments = 1e7;
    /// Largest single table in the decomposition DP.
    double table_entries = double(1u << 26);
    /// Largest admissible decomposition width.
    int width_cap = 12;

    /// Defaults overridden by PARHOM_BUDGET, e.g. "brute=1e6,table=1e8,width=10"
    /// or a bare number setting both size limits.
    static CountBudget from_environment();
};

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    /// Parent bag index, -1 at roots (one root per connected component).
    std::vector<int> parent;
    /// Elimination order that produced the bags; bag k belongs to eliminated[k].
    std::vector<int> eliminated;
    int width = -1;
};

/// Greedy min-fill elimination; ties broken by smallest vertex id.
TreeDecomposition min_fill_decomposition(const Graph& g);
bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td);

BigNat count_homs(const Graph& g, const Graph& h, const CountBudget& budget = {});
bool count_homs_mod2(const Graph& g, const Graph& h, const CountBudget& budget = {});
BigNat count_pinned_homs(const Graph& g, const Graph& h, const PinningFunction& p, const CountBudget& budget = {});
bool count_pinned_homs_mod2(const Graph& g, const Graph& h, const PinningFunction& p,
                            const CountBudget& budget = {});

/// Individual strategies, exposed for cross-validation.
BigNat count_homs_brute_force(const Graph& g, const Graph& h, const PinningFunction& p,
                              const CountBudget& budget = {});
BigNat count_homs_tree_decomposition(const Graph& g, const Graph& h, const PinningFunction& p,
                                     const CountBudget& budget = {});
bool count_homs_tree_decomposition_mod2(const Graph& g, const Graph& h, const PinningFunction& p,
                                        const CountBudget& budget = {});

/// Parity of the weighted sum over independent sets J of
/// lambda^|J| mu^(n-|J|).
bool z_general_is(const Graph& g, std::uint64_t lambda, std::uint64_t mu);
/// Same value by summing over all vertex subsets; at most 25 vertices.
bool z_general_is_by_enumeration(const Graph& g, std::uint64_t lambda, std::uint64_t mu);

/// Number of independent sets (empty set included); at most 64 vertices.
BigNat count_independent_sets(const Graph& g);
bool independent_set_parity(const Graph& g);

}  // namespace parhom
