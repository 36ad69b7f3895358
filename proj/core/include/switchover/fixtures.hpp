#pragma once

#include <string>
#include <utility>
#include <vector>

#include "switchover/graph.hpp"

namespace switchover {

// Small named graphs shared by the verification suite and the tests.
// All have at most 16 edges, so the 2^m enumeration oracles apply.
std::vector<std::pair<std::string, Graph>> fixture_graphs();

// Triangle 0-1-2 plus pendant vertex 3 attached to 0.
Graph triangle_pendant_graph();

// K_r core plus pendants, pendant r+i attached to core vertex i.
Graph clique_core_pendants_graph(int r, int n);

// Two adjacent hubs 0 and 1 with leaves_per_hub leaves each.
Graph double_star_graph(int leaves_per_hub);

} // namespace switchover
