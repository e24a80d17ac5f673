#include "nsphere/spine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nsphere/errors.hpp"
#include "nsphere/graph_census.hpp"

namespace nsphere {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void check_rank(int n) {
  if (n < kMinSpineRank || n > kMaxSpineRank) {
    throw InputError("spine census supports " + std::to_string(kMinSpineRank) + " <= n <= " +
                     std::to_string(kMaxSpineRank) + ", got " + std::to_string(n));
  }
}

}  // namespace

bool is_core_graph(const GraphOfGroups& g) {
  if (!g.connected()) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.vertices()[v].rank != 0 || g.valence(v) < 3) return false;
  }
  return g.separating_edges().empty();
}

CoreGraph::CoreGraph(GraphOfGroups g) : graph_(std::move(g)) {
  if (!is_core_graph(graph_)) throw HypothesisError("graph is not a core graph");
  rank_n_ = rank_of(graph_);
}

bool CoreGraph::trivalent() const {
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    if (graph_.valence(v) != 3) return false;
  }
  return true;
}

std::vector<CoreGraph> enumerate_core_graphs(int n) {
  check_rank(n);
  std::vector<CoreGraph> out;
  // Valence >= 3 forces 2E >= 3V, i.e. V <= 2(n - 1).
  for (std::size_t v = 1; v <= static_cast<std::size_t>(2 * (n - 1)); ++v) {
    const std::size_t e = static_cast<std::size_t>(n) + v - 1;
    for (auto& g : enumerate_connected_multigraphs(v, e)) {
      if (is_core_graph(g)) out.emplace_back(std::move(g));
    }
  }
  return out;
}

CoreGraph forest_collapse(const CoreGraph& g, std::span<const std::string> forest) {
  const GraphOfGroups& base = g.graph();
  std::vector<std::size_t> parent(base.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::set<std::string> ids;
  for (const auto& id : forest) {
    const auto k = base.find_edge(id);
    if (!k) throw InputError("unknown edge '" + id + "'");
    if (!ids.insert(id).second) throw InputError("edge '" + id + "' listed twice");
    const EdgeSpec& e = base.edges()[*k];
    if (e.is_loop()) throw InputError("forest contains loop edge '" + id + "'");
    const std::size_t a = find_root(parent, e.from);
    const std::size_t b = find_root(parent, e.to);
    if (a == b) throw InputError("forest contains a cycle through edge '" + id + "'");
    parent[b] = a;
  }
  GraphOfGroups cur = base;
  for (const auto& id : forest) cur = remove_sphere(cur, id);
  return CoreGraph(std::move(cur));
}

std::vector<std::vector<std::size_t>> enumerate_forests(const GraphOfGroups& g) {
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!g.edges()[k].is_loop()) candidates.push_back(k);
  }
  std::vector<std::vector<std::size_t>> out;
  const std::size_t c = candidates.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << c); ++mask) {
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> forest;
    bool acyclic = true;
    for (std::size_t i = 0; i < c && acyclic; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const EdgeSpec& e = g.edges()[candidates[i]];
      const std::size_t a = find_root(parent, e.from);
      const std::size_t b = find_root(parent, e.to);
      if (a == b) {
        acyclic = false;
      } else {
        parent[b] = a;
        forest.push_back(candidates[i]);
      }
    }
    if (acyclic) out.push_back(std::move(forest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CollapsePoset build_collapse_poset(int n) {
  CollapsePoset poset;
  poset.n = n;
  poset.nodes = enumerate_core_graphs(n);
  std::map<CanonicalForm, std::size_t> index;
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) index.emplace(canonical_form(poset.nodes[i].graph()), i);

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    const GraphOfGroups& g = poset.nodes[i].graph();
    for (const auto& forest : enumerate_forests(g)) {
      std::vector<std::string> ids;
      for (std::size_t k : forest) ids.push_back(g.edges()[k].id);
      const CoreGraph image = forest_collapse(poset.nodes[i], ids);
      const auto it = index.find(canonical_form(image.graph()));
      if (it == index.end()) throw std::logic_error("forest collapse left the core graph census");
      if (seen.emplace(i, it->second).second) poset.arrows.push_back({i, it->second, forest.size()});
    }
  }
  std::sort(poset.arrows.begin(), poset.arrows.end(),
            [](const CollapseArrow& a, const CollapseArrow& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
  return poset;
}

std::size_t longest_chain(const CollapsePoset& poset) {
  // Arrows strictly lower the edge count, so process nodes by edge count.
  std::vector<std::size_t> order(poset.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return poset.nodes[a].graph().edge_count() < poset.nodes[b].graph().edge_count();
  });
  std::vector<std::size_t> depth(poset.nodes.size(), 0);
  std::size_t best = 0;
  for (std::size_t v : order) {
    for (const auto& a : poset.arrows) {
      if (a.from == v) depth[v] = std::max(depth[v], depth[a.to] + 1);
    }
    best = std::max(best, depth[v]);
  }
  return best;
}

bool codimension_one_face_ok(const GraphOfGroups& g, std::size_t edge) {
  const std::size_t nv = g.vertex_count();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k == edge) continue;
    const std::size_t a = find_root(parent, g.edges()[k].from);
    const std::size_t b = find_root(parent, g.edges()[k].to);
    if (a != b) parent[b] = a;
  }
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> census;  // root -> (vertices, edges)
  for (std::size_t v = 0; v < nv; ++v) ++census[find_root(parent, v)].first;
  std::map<std::size_t, std::size_t> loops;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k == edge) continue;
    const std::size_t r = find_root(parent, g.edges()[k].from);
    ++census[r].second;
    if (g.edges()[k].is_loop()) ++loops[r];
  }
  for (const auto& [root, counts] : census) {
    if (counts.first == 1 && counts.second == 1 && loops[root] == 1) return false;
  }
  return true;
}

}  // namespace nsphere
