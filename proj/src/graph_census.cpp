#include "nsphere/graph_census.hpp"

#include <map>

namespace nsphere {

std::vector<GraphOfGroups> enumerate_connected_multigraphs(std::size_t vertices, std::size_t edges) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < vertices; ++i) {
    for (std::size_t j = i; j < vertices; ++j) slots.emplace_back(i, j);
  }
  std::map<CanonicalForm, GraphOfGroups> classes;
  if (vertices == 0) return {};

  std::vector<VertexSpec> vs;
  for (std::size_t i = 0; i < vertices; ++i) vs.push_back({"v" + std::to_string(i + 1), 0});

  // Nondecreasing slot indices enumerate each edge multiset once.
  std::vector<std::size_t> pick(edges, 0);
  while (true) {
    std::vector<EdgeSpec> es;
    es.reserve(edges);
    for (std::size_t k = 0; k < edges; ++k) {
      es.push_back({"e" + std::to_string(k + 1), slots[pick[k]].first, slots[pick[k]].second});
    }
    GraphOfGroups g(vs, std::move(es));
    if (g.connected()) {
      CanonicalForm f = canonical_form(g);
      if (!classes.contains(f)) classes.emplace(std::move(f), canonical_graph(g));
    }
    if (edges == 0) break;
    std::size_t k = edges;
    while (k > 0 && pick[k - 1] == slots.size() - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < edges; ++j) pick[j] = pick[k - 1];
  }

  std::vector<GraphOfGroups> out;
  out.reserve(classes.size());
  for (auto& [form, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<GraphOfGroups> distribute_ranks(const GraphOfGroups& g, int total_rank) {
  std::map<CanonicalForm, GraphOfGroups> classes;
  const std::size_t nv = g.vertex_count();
  if (nv == 0 || total_rank < 0) return {};
  std::vector<int> ranks(nv, 0);
  // Compositions of total_rank into nv nonnegative parts.
  auto emit = [&]() {
    std::vector<VertexSpec> vs = g.vertices();
    for (std::size_t i = 0; i < nv; ++i) vs[i].rank = ranks[i];
    GraphOfGroups h(std::move(vs), g.edges());
    CanonicalForm f = canonical_form(h);
    if (!classes.contains(f)) classes.emplace(std::move(f), canonical_graph(h));
  };
  auto recurse = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nv) {
      ranks[i] = left;
      emit();
      return;
    }
    for (int r = 0; r <= left; ++r) {
      ranks[i] = r;
      self(self, i + 1, left - r);
    }
  };
  recurse(recurse, 0, total_rank);

  std::vector<GraphOfGroups> out;
  for (auto& [form, h] : classes) out.push_back(std::move(h));
  return out;
}

std::vector<GraphOfGroups> enumerate_systems(int n, std::size_t edges, std::size_t max_vertices) {
  std::vector<GraphOfGroups> out;
  for (std::size_t v = 1; v <= max_vertices; ++v) {
    const int vertex_rank = n - (static_cast<int>(edges) - static_cast<int>(v) + 1);
    if (vertex_rank < 0) continue;
    for (const auto& g : enumerate_connected_multigraphs(v, edges)) {
      auto ranked = distribute_ranks(g, vertex_rank);
      out.insert(out.end(), ranked.begin(), ranked.end());
    }
  }
  return out;
}

}  // namespace nsphere
