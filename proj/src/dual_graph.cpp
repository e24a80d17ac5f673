#include "nsphere/dual_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "nsphere/errors.hpp"

namespace nsphere {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

bool connected_without(const GraphOfGroups& g, std::optional<std::size_t> skip) {
  const std::size_t nv = g.vertex_count();
  if (nv == 0) return false;
  UnionFind uf(nv);
  std::size_t components = nv;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (skip && *skip == k) continue;
    if (uf.unite(g.edges()[k].from, g.edges()[k].to)) --components;
  }
  return components == 1;
}

}  // namespace

std::vector<Fault> validate(const SerreGraph& g) {
  std::vector<Fault> faults;
  const std::size_t ne = g.edges.size();
  const std::size_t nv = g.vertices.size();
  for (std::size_t i = 0; i < ne; ++i) {
    const DirectedEdge& e = g.edges[i];
    if (e.origin >= nv || e.terminus >= nv) {
      faults.push_back({e.id, "endpoint out of range"});
    }
    if (e.reverse >= ne) {
      faults.push_back({e.id, "reverse out of range"});
      continue;
    }
    if (e.reverse == i) {
      faults.push_back({e.id, "involution fixed point"});
      continue;
    }
    const DirectedEdge& r = g.edges[e.reverse];
    if (r.reverse != i) faults.push_back({e.id, "involution not an involution"});
    if (r.origin != e.terminus || r.terminus != e.origin) faults.push_back({e.id, "endpoint mismatch"});
  }
  return faults;
}

GraphOfGroups::GraphOfGroups(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> ids;
  for (const auto& v : vertices_) {
    if (v.id.empty()) throw InputError("vertex with empty id");
    if (!ids.insert(v.id).second) throw InputError("duplicate vertex id '" + v.id + "'");
    if (v.rank < 0) throw InputError("vertex '" + v.id + "' has negative rank");
  }
  ids.clear();
  for (const auto& e : edges_) {
    if (e.id.empty()) throw InputError("edge with empty id");
    if (!ids.insert(e.id).second) throw InputError("duplicate edge id '" + e.id + "'");
    if (e.from >= vertices_.size() || e.to >= vertices_.size()) {
      throw InputError("edge '" + e.id + "' references a missing vertex");
    }
  }
}

GraphOfGroups GraphOfGroups::rose(int loops, int vertex_rank) {
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < loops; ++i) edges.push_back({"e" + std::to_string(i + 1), 0, 0});
  return GraphOfGroups({{"v1", vertex_rank}}, std::move(edges));
}

GraphOfGroups GraphOfGroups::theta(int edges, int rank_a, int rank_b) {
  std::vector<EdgeSpec> es;
  for (int i = 0; i < edges; ++i) es.push_back({"e" + std::to_string(i + 1), 0, 1});
  return GraphOfGroups({{"v1", rank_a}, {"v2", rank_b}}, std::move(es));
}

std::optional<std::size_t> GraphOfGroups::find_vertex(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> GraphOfGroups::find_edge(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t GraphOfGroups::valence(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.from == v) ++d;
    if (e.to == v) ++d;
  }
  return d;
}

bool GraphOfGroups::connected() const { return connected_without(*this, std::nullopt); }

bool GraphOfGroups::is_separating(std::size_t edge) const {
  if (edges_.at(edge).is_loop()) return false;
  return connected() && !connected_without(*this, edge);
}

std::vector<std::size_t> GraphOfGroups::separating_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (is_separating(k)) out.push_back(k);
  }
  return out;
}

SerreGraph GraphOfGroups::serre() const {
  SerreGraph s;
  for (const auto& v : vertices_) s.vertices.push_back(v.id);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    s.edges.push_back({e.id, e.from, e.to, 2 * k + 1});
    s.edges.push_back({e.id + "~", e.to, e.from, 2 * k});
  }
  return s;
}

int rank_of(const GraphOfGroups& g) {
  if (!g.connected()) throw HypothesisError("graph of groups is not connected");
  int total = 0;
  for (const auto& v : g.vertices()) total += v.rank;
  return total + static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

SystemClassification classify(const GraphOfGroups& g, int n) {
  SystemClassification c;
  c.total_rank = rank_of(g);
  if (c.total_rank != n) {
    throw HypothesisError("rank mismatch: graph of groups has rank " + std::to_string(c.total_rank) +
                          ", ambient rank is " + std::to_string(n));
  }
  c.is_simple = std::all_of(g.vertices().begin(), g.vertices().end(),
                            [](const VertexSpec& v) { return v.rank == 0; });
  c.is_reduced = c.is_simple && g.vertex_count() == 1;
  for (std::size_t k : g.separating_edges()) c.separating_edges.push_back(g.edges()[k].id);
  if (!c.is_simple) {
    for (const auto& v : g.vertices()) {
      if (v.rank >= 1) {
        c.nonreduced_witness = v.id;
        break;
      }
    }
  }
  return c;
}

std::vector<std::string> extract_reduced_subsystem(const GraphOfGroups& g) {
  const int n = rank_of(g);
  if (!classify(g, n).is_simple) {
    throw HypothesisError("sphere system is not simple: some vertex group is nontrivial");
  }
  std::vector<bool> reached(g.vertex_count(), false);
  std::vector<bool> tree_edge(g.edge_count(), false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      const auto& e = g.edges()[k];
      std::size_t other;
      if (e.from == v) {
        other = e.to;
      } else if (e.to == v) {
        other = e.from;
      } else {
        continue;
      }
      if (reached[other]) continue;
      reached[other] = true;
      tree_edge[k] = true;
      queue.push_back(other);
    }
  }
  std::vector<std::string> out;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!tree_edge[k]) out.push_back(g.edges()[k].id);
  }
  return out;
}

GraphOfGroups remove_sphere(const GraphOfGroups& g, std::string_view edge_id) {
  const auto found = g.find_edge(edge_id);
  if (!found) throw InputError("unknown edge '" + std::string(edge_id) + "'");
  const EdgeSpec removed = g.edges()[*found];

  std::vector<VertexSpec> vertices = g.vertices();
  std::vector<EdgeSpec> edges;
  if (removed.is_loop()) {
    vertices[removed.from].rank += 1;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      if (k != *found) edges.push_back(g.edges()[k]);
    }
    return GraphOfGroups(std::move(vertices), std::move(edges));
  }

  const std::size_t keep = removed.from;
  const std::size_t gone = removed.to;
  vertices[keep].rank += vertices[gone].rank;
  vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(gone));
  auto remap = [&](std::size_t v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k == *found) continue;
    EdgeSpec e = g.edges()[k];
    e.from = remap(e.from);
    e.to = remap(e.to);
    edges.push_back(std::move(e));
  }
  return GraphOfGroups(std::move(vertices), std::move(edges));
}

SphereSystemBlueprint realize_blueprint(const GraphOfGroups& g) {
  if (!g.connected()) throw HypothesisError("graph of groups is not connected");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& vs = g.vertices()[v];
    if (vs.rank != 0) continue;
    const std::size_t d = g.valence(v);
    if (d == 1) {
      throw HypothesisError("hypothesis violated at vertex " + vs.id +
                            ": no terminal vertex with trivial vertex group");
    }
    if (d == 2) {
      throw HypothesisError("hypothesis violated at vertex " + vs.id +
                            ": no valence-2 vertex with trivial vertex group (proxy for "
                            "'no two elementary splittings are conjugate')");
    }
  }

  SphereSystemBlueprint bp;
  auto label = [&](std::size_t v, const EdgeSpec& e, int slot) {
    return g.vertices()[v].id + ":" + e.id + ":" + std::to_string(slot);
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    BlueprintPiece piece{g.vertices()[v].id, g.vertices()[v].rank, {}};
    for (const auto& e : g.edges()) {
      if (e.from == v) piece.punctures.push_back(label(v, e, 0));
      if (e.to == v) piece.punctures.push_back(label(v, e, 1));
    }
    bp.pieces.push_back(std::move(piece));
  }
  for (const auto& e : g.edges()) bp.gluings.push_back({e.id, label(e.from, e, 0), label(e.to, e, 1)});
  return bp;
}

namespace {

struct Labelling {
  CanonicalForm form;
  std::vector<std::size_t> position;  // old vertex -> new position
};

Labelling canonical_labelling(const GraphOfGroups& g) {
  const std::size_t nv = g.vertex_count();
  using Invariant = std::tuple<int, std::size_t, std::size_t>;
  std::vector<Invariant> inv(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t loops = 0;
    for (const auto& e : g.edges()) loops += (e.is_loop() && e.from == v) ? 1 : 0;
    inv[v] = {g.vertices()[v].rank, g.valence(v), loops};
  }
  std::vector<std::size_t> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });

  // Blocks of equal invariant; only orderings inside a block are tried.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < nv;) {
    std::size_t j = i;
    while (j < nv && inv[order[j]] == inv[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  Labelling best;
  bool have = false;
  std::vector<std::size_t> position(nv);
  std::vector<std::pair<int, int>> edges(g.edge_count());
  auto evaluate = [&]() {
    for (std::size_t i = 0; i < nv; ++i) position[order[i]] = i;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      int a = static_cast<int>(position[g.edges()[k].from]);
      int b = static_cast<int>(position[g.edges()[k].to]);
      edges[k] = {std::min(a, b), std::max(a, b)};
    }
    std::sort(edges.begin(), edges.end());
    if (!have || edges < best.form.edges) {
      best.form.edges = edges;
      best.position = position;
      have = true;
    }
  };
  std::function<void(std::size_t)> recurse = [&](std::size_t b) {
    if (b == blocks.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      recurse(b + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(0);
  if (!have) evaluate();

  best.form.ranks.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) best.form.ranks[best.position[v]] = g.vertices()[v].rank;
  return best;
}

}  // namespace

CanonicalForm canonical_form(const GraphOfGroups& g) { return canonical_labelling(g).form; }

GraphOfGroups canonical_graph(const GraphOfGroups& g) {
  const Labelling lab = canonical_labelling(g);
  std::vector<VertexSpec> vertices(g.vertex_count());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    vertices[i] = {"v" + std::to_string(i + 1), lab.form.ranks[i]};
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t k = 0; k < lab.form.edges.size(); ++k) {
    const auto [a, b] = lab.form.edges[k];
    edges.push_back({"e" + std::to_string(k + 1), static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
  }
  return GraphOfGroups(std::move(vertices), std::move(edges));
}

bool isomorphic(const GraphOfGroups& a, const GraphOfGroups& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace nsphere
