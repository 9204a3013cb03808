#pragma once

#include <string>
#include <vector>

#include "parhom/gadgets.hpp"

namespace parhom::detail {

/// For a cycle x_1..x_l, the vertex set of the component of H - E(C)
/// containing each x_j, parallel to `cycle`.
std::vector<std::vector<int>> cycle_components(const Graph& h, const std::vector<int>& cycle);

/// Vertices of h not in `excluded`.
std::vector<int> vertices_outside(const Graph& h, const std::vector<int>& excluded);

/// Re-verifies a constructed gadget and its promised distance requirements;
/// throws InternalContradiction naming `what` on failure.
void require_valid(const Graph& h, const HardnessGadget& g, const std::vector<int>& promised, const std::string& what);

void note(FinderTrace* trace, std::string step);

}  // namespace parhom::detail
