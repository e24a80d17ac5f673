#pragma once

#include <cstddef>
#include <vector>

#include "nsphere/dual_graph.hpp"

namespace nsphere {

// One representative per isomorphism class of connected multigraphs (loops
// allowed) with exactly `vertices` vertices and `edges` edges. Vertex ranks
// are zero; representatives are canonical graphs in canonical-form order.
std::vector<GraphOfGroups> enumerate_connected_multigraphs(std::size_t vertices, std::size_t edges);

// Every way of distributing `total_rank` over the vertices of `g`, one per
// isomorphism class of the resulting graph of groups.
std::vector<GraphOfGroups> distribute_ranks(const GraphOfGroups& g, int total_rank);

// Graphs of groups of rank n with exactly `edges` geometric edges on at most
// `max_vertices` vertices, one per isomorphism class.
std::vector<GraphOfGroups> enumerate_systems(int n, std::size_t edges, std::size_t max_vertices);

}  // namespace nsphere
