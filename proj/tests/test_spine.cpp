#include <doctest.h>

#include <set>

#include "nsphere/errors.hpp"
#include "nsphere/spine.hpp"
#include "oracles.hpp"

using namespace nsphere;

namespace {

oracle::Adj to_adj(const GraphOfGroups& g) {
  oracle::Adj m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      ++m[e.from][e.from];
    } else {
      ++m[e.from][e.to];
      ++m[e.to][e.from];
    }
  }
  return m;
}

std::vector<std::string> ids(const GraphOfGroups& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(g.edges()[i].id);
  return out;
}

std::size_t find_class(const std::vector<CoreGraph>& nodes, const GraphOfGroups& g) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (isomorphic(nodes[i].graph(), g)) return i;
  return nodes.size();
}

}  // namespace

TEST_CASE("core graph predicate") {
  CHECK(is_core_graph(GraphOfGroups::rose(2)));
  CHECK(is_core_graph(GraphOfGroups::theta(3)));
  CHECK_FALSE(is_core_graph(GraphOfGroups::rose(1)));
  CHECK_FALSE(is_core_graph(GraphOfGroups::theta(3, 1, 0)));
  auto dumbbell = GraphOfGroups({{"a", 0}, {"b", 0}}, {{"l1", 0, 0}, {"bar", 0, 1}, {"l2", 1, 1}});
  CHECK_FALSE(is_core_graph(dumbbell));
  CHECK_THROWS_AS(CoreGraph{dumbbell}, HypothesisError);
  CHECK(CoreGraph(GraphOfGroups::theta(3)).trivalent());
  CHECK_FALSE(CoreGraph(GraphOfGroups::rose(2)).trivalent());
  CHECK(CoreGraph(GraphOfGroups::rose(3)).rank_n() == 3);
}

TEST_CASE("enumerate_core_graphs, n = 2") {
  auto g = enumerate_core_graphs(2);
  REQUIRE(g.size() == 2);
  CHECK(find_class(g, GraphOfGroups::rose(2)) < 2);
  CHECK(find_class(g, GraphOfGroups::theta(3)) < 2);
  auto dumbbell = GraphOfGroups({{"a", 0}, {"b", 0}}, {{"l1", 0, 0}, {"bar", 0, 1}, {"l2", 1, 1}});
  CHECK(find_class(g, dumbbell) == 2);
  CHECK_THROWS_AS(enumerate_core_graphs(1), InputError);
  CHECK_THROWS_AS(enumerate_core_graphs(4), InputError);
}

TEST_CASE("core graph census matches the adjacency oracle") {
  for (int n = 2; n <= 3; ++n) {
    auto lib = enumerate_core_graphs(n);
    auto expected = oracle::core_graphs(n);
    REQUIRE(lib.size() == expected.size());
    std::set<std::size_t> hit;
    for (const auto& c : lib) {
      auto m = to_adj(c.graph());
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (oracle::same_graph(expected[i], m)) hit.insert(i);
    }
    CHECK(hit.size() == expected.size());
  }
  CHECK(enumerate_core_graphs(3).size() == 8);
  std::size_t trivalent = 0;
  for (const auto& c : enumerate_core_graphs(3)) trivalent += c.trivalent() ? 1 : 0;
  CHECK(trivalent == 2);
}

TEST_CASE("forest_collapse examples") {
  CoreGraph theta(GraphOfGroups::theta(3));
  std::vector<std::string> one = {"e1"};
  auto rose = forest_collapse(theta, one);
  CHECK(isomorphic(rose.graph(), GraphOfGroups::rose(2)));
  CHECK(forest_collapse(theta, {}).graph().edge_count() == 3);

  CoreGraph r2(GraphOfGroups::rose(2));
  std::vector<std::string> loop = {"e1"};
  CHECK_THROWS_AS(forest_collapse(r2, loop), InputError);
  std::vector<std::string> cycle = {"e1", "e2"};
  CHECK_THROWS_AS(forest_collapse(theta, cycle), InputError);
  std::vector<std::string> unknown = {"zz"};
  CHECK_THROWS_AS(forest_collapse(theta, unknown), InputError);
}

TEST_CASE("forest collapses stay inside the census and never create separating edges") {
  for (int n = 2; n <= 3; ++n) {
    auto nodes = enumerate_core_graphs(n);
    for (const auto& c : nodes) {
      for (const auto& forest : enumerate_forests(c.graph())) {
        auto q = forest_collapse(c, ids(c.graph(), forest));
        REQUIRE(rank_of(q.graph()) == n);
        REQUIRE(q.graph().separating_edges().empty());
        REQUIRE(find_class(nodes, q.graph()) < nodes.size());
        REQUIRE(q.graph().edge_count() == c.graph().edge_count() - forest.size());
      }
    }
  }
}

TEST_CASE("forest enumeration matches subset brute force") {
  for (const auto& c : enumerate_core_graphs(3)) {
    const auto& g = c.graph();
    std::vector<std::size_t> non_loops;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (!g.edges()[i].is_loop()) non_loops.push_back(i);
    std::size_t acyclic = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << non_loops.size()); ++mask) {
      std::vector<std::array<std::size_t, 2>> chosen;
      for (std::size_t b = 0; b < non_loops.size(); ++b)
        if ((mask >> b) & 1u) chosen.push_back({g.edges()[non_loops[b]].from, g.edges()[non_loops[b]].to});
      oracle::Adj out;
      if (oracle::contract(to_adj(g), chosen, out)) ++acyclic;
    }
    auto forests = enumerate_forests(g);
    std::size_t nonempty = 0;
    for (const auto& f : forests) nonempty += f.empty() ? 0 : 1;
    CHECK(nonempty == acyclic);
  }
}

TEST_CASE("collapse poset, n = 2") {
  auto p = build_collapse_poset(2);
  REQUIRE(p.nodes.size() == 2);
  REQUIRE(p.arrows.size() == 1);
  const auto& a = p.arrows[0];
  CHECK(isomorphic(p.nodes[a.from].graph(), GraphOfGroups::theta(3)));
  CHECK(isomorphic(p.nodes[a.to].graph(), GraphOfGroups::rose(2)));
  CHECK(a.forest_size == 1);
  CHECK(longest_chain(p) == 1);
  CHECK_THROWS_AS(build_collapse_poset(4), InputError);
}

TEST_CASE("collapse poset, n = 3") {
  auto p = build_collapse_poset(3);
  CHECK(p.nodes.size() == 8);
  // frozen from the subset-contraction oracle
  CHECK(p.arrows.size() == 19);
  CHECK(oracle::collapse_arrow_count(oracle::core_graphs(3)) == 19);
  CHECK(longest_chain(p) == 3);
  for (const auto& a : p.arrows) {
    CHECK(p.nodes[a.from].graph().edge_count() > p.nodes[a.to].graph().edge_count());
    CHECK(a.forest_size == p.nodes[a.from].graph().edge_count() - p.nodes[a.to].graph().edge_count());
  }
  CHECK(std::is_sorted(p.arrows.begin(), p.arrows.end(), [](const CollapseArrow& x, const CollapseArrow& y) {
    return std::pair(x.from, x.to) < std::pair(y.from, y.to);
  }));
}

TEST_CASE("every node reaches a rose") {
  for (int n = 2; n <= 3; ++n) {
    auto p = build_collapse_poset(n);
    for (std::size_t v = 0; v < p.nodes.size(); ++v) {
      bool reaches = p.nodes[v].graph().vertex_count() == 1;
      for (const auto& a : p.arrows)
        if (a.from == v && p.nodes[a.to].graph().vertex_count() == 1) reaches = true;
      CHECK(reaches);
    }
  }
}

TEST_CASE("codimension-one faces of trivalent graphs") {
  std::size_t checked = 0;
  for (int n = 2; n <= 3; ++n) {
    for (const auto& c : enumerate_core_graphs(n)) {
      if (!c.trivalent()) continue;
      for (std::size_t e = 0; e < c.graph().edge_count(); ++e) {
        REQUIRE(codimension_one_face_ok(c.graph(), e));
        ++checked;
      }
    }
  }
  CHECK(checked == 3 + 6 + 6);
  // a single vertex with one loop hanging off a bridge is what the check catches
  auto lollipop = GraphOfGroups({{"a", 0}, {"b", 0}}, {{"l", 0, 0}, {"bar", 0, 1}, {"m", 1, 1}});
  CHECK_FALSE(codimension_one_face_ok(lollipop, 1));
}

TEST_CASE("remove_sphere on core graphs: loops leave a non-simply-connected piece") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& c : enumerate_core_graphs(n)) {
      for (const auto& e : c.graph().edges()) {
        auto h = remove_sphere(c.graph(), e.id);
        auto k = classify(h, n);
        REQUIRE(k.is_simple == !e.is_loop());
      }
    }
  }
}
