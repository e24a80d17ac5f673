#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsphere {

// Raw Serre graph: directed edges with an involution e -> reverse(e) and
// endpoint maps. Built from untrusted data, so nothing is enforced here;
// see validate().
struct DirectedEdge {
  std::string id;
  std::size_t origin = 0;
  std::size_t terminus = 0;
  std::size_t reverse = 0;
};

struct SerreGraph {
  std::vector<std::string> vertices;
  std::vector<DirectedEdge> edges;
};

struct Fault {
  std::string edge;
  std::string kind;
};

// Checks the involution and endpoint axioms. An empty result means ok.
std::vector<Fault> validate(const SerreGraph& g);

struct VertexSpec {
  std::string id;
  int rank = 0;
};

// Geometric edge; the reverse orientation is implicit.
struct EdgeSpec {
  std::string id;
  std::size_t from = 0;
  std::size_t to = 0;

  bool is_loop() const { return from == to; }
};

// Graph of groups with trivial edge groups. Vertex groups are free and
// recorded by rank only.
class GraphOfGroups {
 public:
  GraphOfGroups() = default;
  GraphOfGroups(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges);

  // One vertex carrying `loops` loops.
  static GraphOfGroups rose(int loops, int vertex_rank = 0);
  // Two vertices joined by `edges` parallel edges.
  static GraphOfGroups theta(int edges = 3, int rank_a = 0, int rank_b = 0);

  const std::vector<VertexSpec>& vertices() const { return vertices_; }
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;

  // Loops count twice.
  std::size_t valence(std::size_t v) const;
  bool connected() const;
  // Geometric edge whose removal disconnects the graph. Loops never are.
  bool is_separating(std::size_t edge) const;
  std::vector<std::size_t> separating_edges() const;

  // Edge k becomes directed edges 2k (id) and 2k+1 (id + "~").
  SerreGraph serre() const;

 private:
  std::vector<VertexSpec> vertices_;
  std::vector<EdgeSpec> edges_;
};

// Rank of the fundamental group: sum of vertex ranks plus E - V + 1.
// Throws HypothesisError for a disconnected (or empty) graph.
int rank_of(const GraphOfGroups& g);

struct SystemClassification {
  int total_rank = 0;
  bool is_reduced = false;
  bool is_simple = false;
  std::vector<std::string> separating_edges;
  std::optional<std::string> nonreduced_witness;
};

SystemClassification classify(const GraphOfGroups& g, int n);

// Edge ids outside a breadth-first spanning tree rooted at the first vertex.
std::vector<std::string> extract_reduced_subsystem(const GraphOfGroups& g);

// Contracts a non-loop edge (endpoint ranks add, the origin keeps its id) or
// deletes a loop and raises its vertex rank by one.
GraphOfGroups remove_sphere(const GraphOfGroups& g, std::string_view edge_id);

struct BlueprintPiece {
  std::string vertex;
  int copies_of_s2xs1 = 0;
  std::vector<std::string> punctures;
};

struct BlueprintGluing {
  std::string edge;
  std::string first;
  std::string second;
};

struct SphereSystemBlueprint {
  std::vector<BlueprintPiece> pieces;
  std::vector<BlueprintGluing> gluings;
};

// Puncture labels are "vertex:edge:slot", slot 0 at the edge's origin and 1
// at its terminus.
SphereSystemBlueprint realize_blueprint(const GraphOfGroups& g);

// Minimum over vertex orderings (respecting a rank/valence/loop invariant)
// of the sorted edge list; equal forms <=> isomorphic graphs of groups.
struct CanonicalForm {
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> edges;

  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const GraphOfGroups& g);
// Relabelled copy in canonical order with ids v1.., e1...
GraphOfGroups canonical_graph(const GraphOfGroups& g);
bool isomorphic(const GraphOfGroups& a, const GraphOfGroups& b);

}  // namespace nsphere
