#include <doctest.h>

#include "nsphere/errors.hpp"
#include "nsphere/infinite_link.hpp"
#include "nsphere/io.hpp"
#include "nsphere/link_model.hpp"
#include "nsphere/spine.hpp"

using namespace nsphere;
using io::json;

TEST_CASE("graph JSON round-trip") {
  auto g = GraphOfGroups({{"a", 1}, {"b", 0}}, {{"e", 0, 1}, {"l", 1, 1}});
  json j = io::to_json(g);
  CHECK(j["edges"][1]["loop"] == true);
  auto back = io::graph_from_json(j);
  CHECK(io::to_json(back) == j);

  j["paper_anchor"] = "x";
  CHECK_NOTHROW(io::graph_from_json(j));

  auto text = R"({"vertices":[{"id":"v","rank":0}],"edges":[{"id":"e","from":"v","to":"v"}]})";
  CHECK(io::graph_from_json(io::parse_json(text)).edges()[0].is_loop());
}

TEST_CASE("graph JSON errors") {
  CHECK_THROWS_AS(io::parse_json("{oops"), InputError);
  CHECK_THROWS_AS(io::graph_from_json(json::object()), InputError);
  // missing rank means trivial vertex group
  CHECK(io::graph_from_json(io::parse_json(R"({"vertices":[{"id":"v"}],"edges":[]})")).vertices()[0].rank == 0);
  CHECK_THROWS_AS(
      io::graph_from_json(io::parse_json(R"({"vertices":[{"id":"v","rank":0}],"edges":[{"id":"e","from":"v","to":"w"}]})")),
      InputError);
  CHECK_THROWS_AS(io::graph_from_json(io::parse_json(
                      R"({"vertices":[{"id":"v","rank":0}],"edges":[{"id":"e","from":"v","to":"v","loop":false}]})")),
                  InputError);
  CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"vertices":[{"id":"v","rank":"zero"}],"edges":[]})")),
                  InputError);
}

TEST_CASE("graph DOT") {
  auto dot = io::to_dot(GraphOfGroups::theta(3, 1, 0));
  CHECK(dot.rfind("graph \"G\" {", 0) == 0);
  CHECK(dot.find("v1 (rank 1)") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("partition and complex JSON") {
  auto v = enumerate_link_vertices(3);
  for (const auto& p : v) CHECK(io::partition_from_json(io::to_json(p)) == p);
  CHECK(io::to_json(v[0]) == json::parse(R"({"n":3,"side":["1+","1-","2+"]})"));
  CHECK_THROWS_AS(io::partition_from_json(json::parse(R"({"n":2,"side":[]})")), InputError);

  auto c = build_link_complex(3);
  auto back = io::complex_from_json(io::to_json(c));
  CHECK(back.vertices() == c.vertices());
  CHECK(back.edges() == c.edges());

  json tampered = io::to_json(c);
  tampered["edges"].erase(tampered["edges"].begin());
  CHECK_THROWS_AS(io::complex_from_json(tampered), InputError);

  auto dot = io::to_dot(c);
  CHECK(dot.find("(1,1,0)") != std::string::npos);
}

TEST_CASE("witness and certificate JSON") {
  auto w = find_witness(GraphOfGroups::theta(2, 1, 0), 2);
  CHECK(io::witness_from_json(io::to_json(w)) == w);
  for (int m = 1; m <= 4; ++m) {
    auto c = generate_tm(w, m);
    json j = io::to_json(c);
    CHECK(j["pieces"][0]["separates"] == json::parse(R"(["S1","S2"])"));
    CHECK(io::certificate_from_json(j) == c);
  }
  auto r = reverse_tube(generate_tm(w, 3));
  CHECK(io::certificate_from_json(io::to_json(r)) == r);
}

TEST_CASE("poset JSON and DOT") {
  for (int n = 2; n <= 3; ++n) {
    auto p = build_collapse_poset(n);
    auto back = io::poset_from_json(io::to_json(p));
    REQUIRE(back.nodes.size() == p.nodes.size());
    CHECK(back.arrows == p.arrows);
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
      CHECK(io::to_json(back.nodes[i].graph()) == io::to_json(p.nodes[i].graph()));
  }
  auto dot = io::to_dot(build_collapse_poset(2));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("1 -> 0") != std::string::npos);
}

TEST_CASE("whitehead JSON") {
  auto r = is_primitive(Word::parse("ab"));
  json j = io::to_json(r);
  CHECK(j["primitive"] == true);
  CHECK(j["min_word"].get<std::string>().size() == 2);
  auto m = io::to_json(whitehead_minimize(Word::parse("abAB")));
  CHECK(m["cyclic_length"] == 4);
  CHECK(m["trace"].empty());
}

TEST_CASE("classification JSON keys") {
  json j = io::to_json(classify(GraphOfGroups::rose(2), 2));
  CHECK(j["reduced"] == true);
  CHECK(j["simple"] == true);
  CHECK(j["total_rank"] == 2);
  CHECK(j["nonreduced_witness"].is_null());
}
