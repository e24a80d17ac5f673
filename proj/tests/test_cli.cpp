#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "nsphere/infinite_link.hpp"
#include "nsphere/spine.hpp"

using namespace nsphere;
using io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("nsphere_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kRose = R"({"vertices":[{"id":"v","rank":0}],"edges":[{"id":"e1","from":"v","to":"v"},{"id":"e2","from":"v","to":"v"}]})";
const char* kTwoParallel =
    R"({"vertices":[{"id":"a","rank":1},{"id":"b","rank":0}],"edges":[{"id":"e1","from":"a","to":"b"},{"id":"e2","from":"a","to":"b"}]})";
const char* kLeaf = R"({"vertices":[{"id":"a","rank":1},{"id":"b","rank":0}],"edges":[{"id":"e1","from":"a","to":"b"}]})";

cli::CommandPlan plan(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return cli::parse(args, in);
}

}  // namespace

TEST_CASE("parse examples") {
  auto p = plan({"link-enum", "--n", "3", "--format", "json"});
  CHECK(p.subcommand == cli::Subcommand::LinkEnum);
  CHECK(p.integer("n") == 3);
  CHECK(p.format == cli::Format::Json);

  auto path = write_temp("sys.json", kTwoParallel);
  auto t = plan({"tm-family", "--max-m", "50", "--input", path});
  CHECK(t.subcommand == cli::Subcommand::TmFamily);
  CHECK(t.integer("max-m") == 50);
  REQUIRE(t.input.has_value());
  CHECK((*t.input)["vertices"].size() == 2);

  CHECK_THROWS_AS(plan({"link-enum"}), cli::UsageError);
  CHECK_THROWS_AS(plan({"frobnicate"}), cli::UsageError);
  CHECK_THROWS_AS(plan({}), cli::UsageError);
  CHECK_THROWS_AS(plan({"link-enum", "--n", "three"}), cli::UsageError);
  CHECK_THROWS_AS(plan({"link-enum", "--n", "2", "--word", "ab"}), cli::UsageError);
  CHECK_THROWS_AS(plan({"link-enum", "--n", "2", "--format", "dot"}), cli::UsageError);
  CHECK_THROWS_AS(plan({"classify", "--input", "-"}, "{not json"), cli::UsageError);
  CHECK_THROWS_AS(plan({"classify", "--input", "/nonexistent/file.json"}), cli::UsageError);
  CHECK_THROWS_AS(plan({"tm-family", "--input", path, "--m", "2", "--max-m", "3"}), cli::UsageError);
}

TEST_CASE("usage errors exit 1 and name the flag") {
  auto r = run({"link-enum"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--n") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("link-enum --n 2") {
  auto r = run({"link-enum", "--n", "2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["partitions"].size() == 2);
  CHECK(j["paper_anchor"] == "reduced-link-finiteness");
  for (const auto& p : j["partitions"]) CHECK_NOTHROW(io::partition_from_json(p));
}

TEST_CASE("classify the rose") {
  auto r = run({"classify", "--input", "-"}, kRose);
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["reduced"] == true);
  CHECK(j["simple"] == true);
  CHECK(j.contains("paper_anchor"));

  CHECK(run({"classify", "--input", "-", "--n", "3"}, kRose).code == 2);
}

TEST_CASE("realize with a rank-0 terminal vertex exits 2") {
  auto r = run({"realize", "--input", "-"}, kLeaf);
  CHECK(r.code == 2);
  CHECK(r.err.find("no terminal vertex with trivial vertex group") != std::string::npos);
  auto j = json::parse(r.out);
  CHECK(j["paper_anchor"] == "sphere-system-realization");
}

TEST_CASE("every subcommand runs and carries an anchor") {
  auto two = write_temp("two.json", kTwoParallel);
  auto theta = write_temp("theta.json", io::to_json(GraphOfGroups::theta(3)).dump());
  std::vector<std::vector<std::string>> calls = {
      {"link-enum", "--n", "3"},
      {"link-complex", "--n", "3"},
      {"star-max", "--n", "3"},
      {"classify", "--input", theta},
      {"reduce", "--input", theta},
      {"remove", "--input", theta, "--edge", "e1"},
      {"realize", "--input", theta},
      {"witness", "--input", two},
      {"tm-family", "--input", two, "--max-m", "5"},
      {"tm-family", "--input", two, "--m", "3"},
      {"spine-enum", "--n", "3"},
      {"spine-poset", "--n", "3"},
      {"wh-min", "--word", "a b a B"},
      {"primitive", "--word", "a1 a2"},
  };
  for (const auto& args : calls) {
    INFO(args[0]);
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.contains("paper_anchor"));
    auto text = args;
    text.insert(text.end(), {"--format", "text"});
    auto t = run(text);
    CHECK(t.code == 0);
    CHECK(t.out.find("paper_anchor: ") != std::string::npos);
  }
}

TEST_CASE("outputs read back through the matching readers") {
  auto two = write_temp("two_rt.json", kTwoParallel);
  auto theta = write_temp("theta_rt.json", io::to_json(GraphOfGroups::theta(3)).dump());

  auto removed = json::parse(run({"remove", "--input", theta, "--edge", "e2"}).out);
  auto g = io::graph_from_json(removed);
  CHECK(g.vertex_count() == 1);
  auto again = run({"classify", "--input", "-"}, removed.dump());
  CHECK(again.code == 0);

  auto complex = io::complex_from_json(json::parse(run({"link-complex", "--n", "3"}).out));
  CHECK(complex.edges().size() == 78);

  auto poset = io::poset_from_json(json::parse(run({"spine-poset", "--n", "3"}).out));
  CHECK(poset.arrows.size() == 19);

  auto w = io::witness_from_json(json::parse(run({"witness", "--input", two}).out));
  CHECK(w.rank_k == 1);

  auto c = io::certificate_from_json(json::parse(run({"tm-family", "--input", two, "--m", "4"}).out));
  CHECK(c.pieces.size() == 5);
  CHECK(c.normal);

  auto family = json::parse(run({"tm-family", "--input", two, "--max-m", "50"}).out);
  CHECK(family["family"]["distinct"] == true);
  CHECK(family["certificates"].size() == 50);
  for (const auto& cert : family["certificates"]) CHECK(io::certificate_from_json(cert).normal);

  auto spine = json::parse(run({"spine-enum", "--n", "2"}).out);
  for (const auto& gj : spine["graphs"]) CHECK(is_core_graph(io::graph_from_json(gj)));
}

TEST_CASE("dot output") {
  auto r = run({"spine-poset", "--n", "2", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") == 0);
  auto c = run({"link-complex", "--n", "2", "--format", "dot"});
  CHECK(c.out.find("graph") == 0);
  auto theta = write_temp("theta_dot.json", io::to_json(GraphOfGroups::theta(3)).dump());
  CHECK(run({"classify", "--input", theta, "--format", "dot"}).out.find("v1 (rank 0)") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
  for (auto args : std::vector<std::vector<std::string>>{{"link-complex", "--n", "4"}, {"spine-poset", "--n", "3"},
                                                         {"primitive", "--word", "aabAB"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("input errors exit 1") {
  CHECK(run({"link-enum", "--n", "0"}).code == 1);
  CHECK(run({"link-enum", "--n", "99"}).code == 1);
  CHECK(run({"spine-enum", "--n", "5"}).code == 1);
  CHECK(run({"wh-min", "--word", ""}).code == 1);
  CHECK(run({"wh-min", "--word", "a?"}).code == 1);
  CHECK(run({"remove", "--input", "-", "--edge", "nope"}, kRose).code == 1);
  CHECK(run({"classify", "--input", "-"}, "[1,2,3]").code == 1);
  CHECK(run({"classify", "--input", "-"}, R"({"vertices":[],"edges":[]})").code != 0);
  auto two = write_temp("two_err.json", kTwoParallel);
  CHECK(run({"tm-family", "--input", two, "--max-m", "0"}).code == 1);
  CHECK(run({"tm-family", "--input", two, "--m", "0"}).code == 1);
  CHECK(run({"witness", "--input", "-"}, kRose).code == 2);
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("tm-family") != std::string::npos);
  CHECK(run({"classify", "--help"}).out.find("--input") != std::string::npos);
}

TEST_CASE("random argument soup never escapes the exit-code contract") {
  const std::vector<std::string> tokens = {"link-enum", "classify", "wh-min", "--n", "--m", "--word", "--input",
                                           "--format", "json", "dot", "-1", "2", "abc", "-", "{", "--edge", ""};
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> args;
    const int len = static_cast<int>(rng() % 6);
    for (int k = 0; k < len; ++k) args.push_back(tokens[rng() % tokens.size()]);
    auto r = run(args, "{\"vertices\": 3}");
    REQUIRE((r.code == 0 || r.code == 1 || r.code == 2));
  }
}
