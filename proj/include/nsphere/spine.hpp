#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nsphere/dual_graph.hpp"

namespace nsphere {

// Connected, vertex ranks zero, no separating edge, every valence >= 3.
bool is_core_graph(const GraphOfGroups& g);

// Combinatorial type of a cell of reduced outer space (no metric, no marking).
class CoreGraph {
 public:
  // Throws HypothesisError if `g` fails a core predicate.
  explicit CoreGraph(GraphOfGroups g);

  const GraphOfGroups& graph() const { return graph_; }
  int rank_n() const { return rank_n_; }
  bool trivalent() const;

 private:
  GraphOfGroups graph_;
  int rank_n_ = 0;
};

inline constexpr int kMinSpineRank = 2;
inline constexpr int kMaxSpineRank = 3;

// One canonical representative per isomorphism class.
std::vector<CoreGraph> enumerate_core_graphs(int n);

// Contracts the listed edges. Throws InputError if one is a loop, unknown,
// or the edges contain a cycle.
CoreGraph forest_collapse(const CoreGraph& g, std::span<const std::string> forest);

// Every nonempty forest of non-loop edges, as sorted edge-index lists.
std::vector<std::vector<std::size_t>> enumerate_forests(const GraphOfGroups& g);

struct CollapseArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t forest_size = 0;

  bool operator==(const CollapseArrow&) const = default;
};

struct CollapsePoset {
  int n = 0;
  std::vector<CoreGraph> nodes;
  std::vector<CollapseArrow> arrows;  // sorted by (from, to)
};

CollapsePoset build_collapse_poset(int n);

// Number of arrows in the longest chain.
std::size_t longest_chain(const CollapsePoset& poset);

// Deleting `edge` leaves no component that is one vertex carrying one loop.
bool codimension_one_face_ok(const GraphOfGroups& g, std::size_t edge);

}  // namespace nsphere
