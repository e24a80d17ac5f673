#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nsphere/dual_graph.hpp"
#include "nsphere/free_group.hpp"
#include "nsphere/infinite_link.hpp"
#include "nsphere/link_model.hpp"
#include "nsphere/spine.hpp"

namespace nsphere::cli {

using io::json;

namespace {

constexpr int kMaxFamilySize = 1000;

struct Schema {
  Subcommand cmd;
  const char* name;
  const char* summary;
  const char* anchor;
  std::vector<std::string> required;
  std::vector<std::string> optional;
  bool dot = false;
};

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> table = {
      {Subcommand::LinkEnum, "link-enum", "admissible partitions of the 2n boundary labels",
       "reduced-link-finiteness", {"n"}, {}},
      {Subcommand::LinkComplex, "link-complex", "compatibility complex on the admissible partitions",
       "reduced-link-finiteness", {"n"}, {}, true},
      {Subcommand::StarMax, "star-max", "largest simplex through a reduced system",
       "nonseparating-complex-dimension", {"n"}, {}},
      {Subcommand::Classify, "classify", "classify a sphere system by its dual graph",
       "non-simple-dual-graph", {"input"}, {"n"}, true},
      {Subcommand::Reduce, "reduce", "reduced subsystem of a simple system",
       "spanning-tree-reduction", {"input"}, {}, true},
      {Subcommand::Remove, "remove", "remove one sphere (edge) from a system",
       "codimension-one-face", {"input", "edge"}, {}, true},
      {Subcommand::Realize, "realize", "sphere-system blueprint for a graph of groups",
       "sphere-system-realization", {"input"}, {}},
      {Subcommand::Witness, "witness", "complementary component carrying the tube family",
       "non-reduced-link-infiniteness", {"input"}, {"n"}},
      {Subcommand::TmFamily, "tm-family", "tube certificates T_1..T_max-m (or a single T_m)",
       "non-reduced-link-infiniteness", {"input"}, {"n", "m", "max-m"}},
      {Subcommand::SpineEnum, "spine-enum", "core graphs of rank n up to isomorphism",
       "reduced-outer-space-spine", {"n"}, {}, true},
      {Subcommand::SpinePoset, "spine-poset", "forest-collapse poset on core graphs",
       "reduced-outer-space-spine", {"n"}, {}, true},
      {Subcommand::WhMin, "wh-min", "Whitehead-minimal representative of a cyclic word",
       "whitehead-peak-reduction", {"word"}, {"n"}},
      {Subcommand::Primitive, "primitive", "primitivity test with certificate",
       "primitive-element-splitting", {"word"}, {"n"}},
  };
  return table;
}

const Schema& schema_of(Subcommand s) {
  for (const auto& sc : schemas())
    if (sc.cmd == s) return sc;
  throw std::logic_error("unknown subcommand");
}

const std::vector<std::string> kIntegerFlags = {"n", "m", "max-m"};

std::string help_for(const std::string& flag) {
  if (flag == "n") return "rank / number of spheres";
  if (flag == "m") return "single tube index";
  if (flag == "max-m") return "largest tube index (default 50)";
  if (flag == "input") return "graph JSON file, '-' for stdin";
  if (flag == "word") return "word such as \"a b A\" or \"a1 A2\"";
  if (flag == "edge") return "edge id";
  return "";
}

std::string read_payload(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("--input: cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void render_text(const json& j, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  } else if (j.is_array()) {
    for (const auto& v : j) os << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  } else {
    os << j.dump() << '\n';
  }
}

GraphOfGroups contract_tree(GraphOfGroups g, const std::vector<std::string>& keep) {
  std::vector<std::string> tree;
  for (const auto& e : g.edges())
    if (std::find(keep.begin(), keep.end(), e.id) == keep.end()) tree.push_back(e.id);
  for (const auto& id : tree) g = remove_sphere(g, id);
  return g;
}

struct Result {
  json data;
  std::string dot;
};

Result dispatch(const CommandPlan& plan) {
  const auto n = plan.integer("n");
  const auto& p = plan.params;
  auto graph = [&] { return io::graph_from_json(*plan.input); };

  switch (plan.subcommand) {
    case Subcommand::LinkEnum: {
      json parts = json::array();
      for (const auto& part : enumerate_link_vertices(*n)) parts.push_back(io::to_json(part));
      return {{{"n", *n}, {"count", parts.size()}, {"partitions", parts}}, {}};
    }
    case Subcommand::LinkComplex: {
      auto complex = build_link_complex(*n);
      json j = io::to_json(complex);
      j["report"] = io::to_json(summarize(complex));
      return {j, io::to_dot(complex)};
    }
    case Subcommand::StarMax: {
      const int size = max_simple_star_size(*n);
      return {{{"n", *n}, {"max_star_size", size}, {"dimension", size - 1}}, {}};
    }
    case Subcommand::Classify: {
      auto g = graph();
      json j = io::to_json(classify(g, n ? *n : rank_of(g)));
      return {j, io::to_dot(g)};
    }
    case Subcommand::Reduce: {
      auto g = graph();
      auto keep = extract_reduced_subsystem(g);
      auto rose = contract_tree(g, keep);
      return {{{"subsystem", keep}, {"count", keep.size()}, {"rose", io::to_json(rose)}}, io::to_dot(rose)};
    }
    case Subcommand::Remove: {
      auto g = remove_sphere(graph(), p.at("edge"));
      json j = io::to_json(g);
      j["removed"] = p.at("edge");
      j["classification"] = io::to_json(classify(g, rank_of(g)));
      return {j, io::to_dot(g)};
    }
    case Subcommand::Realize:
      return {io::to_json(realize_blueprint(graph())), {}};
    case Subcommand::Witness: {
      auto g = graph();
      return {io::to_json(find_witness(g, n ? *n : rank_of(g))), {}};
    }
    case Subcommand::TmFamily: {
      auto g = graph();
      auto w = find_witness(g, n ? *n : rank_of(g));
      if (auto m = plan.integer("m")) {
        json j = io::to_json(generate_tm(w, *m));
        return {j, {}};
      }
      const int max_m = plan.integer("max-m").value_or(50);
      if (max_m < 1 || max_m > kMaxFamilySize)
        throw InputError("--max-m must lie in 1.." + std::to_string(kMaxFamilySize));
      std::vector<TubeCertificate> certs;
      for (int m = 1; m <= max_m; ++m) certs.push_back(generate_tm(w, m));
      json list = json::array();
      for (const auto& c : certs) list.push_back(io::to_json(c));
      return {{{"witness", io::to_json(w)}, {"family", io::to_json(verify_distinct_family(certs))},
               {"certificates", list}},
              {}};
    }
    case Subcommand::SpineEnum: {
      json graphs = json::array();
      std::string dot;
      int i = 0;
      for (const auto& c : enumerate_core_graphs(*n)) {
        json g = io::to_json(c.graph());
        g["trivalent"] = c.trivalent();
        graphs.push_back(g);
        dot += io::to_dot(c.graph(), "G" + std::to_string(i++));
      }
      return {{{"n", *n}, {"count", graphs.size()}, {"graphs", graphs}}, dot};
    }
    case Subcommand::SpinePoset: {
      auto poset = build_collapse_poset(*n);
      json j = io::to_json(poset);
      j["longest_chain"] = longest_chain(poset);
      return {j, io::to_dot(poset)};
    }
    case Subcommand::WhMin: {
      auto w = Word::parse(p.at("word"), n.value_or(0));
      json j = io::to_json(whitehead_minimize(w));
      j["input"] = w.to_string();
      return {j, {}};
    }
    case Subcommand::Primitive: {
      auto w = Word::parse(p.at("word"), n.value_or(0));
      json j = io::to_json(is_primitive(w));
      j["input"] = w.to_string();
      return {j, {}};
    }
  }
  throw std::logic_error("unhandled subcommand");
}

}  // namespace

std::string name_of(Subcommand s) { return schema_of(s).name; }

std::optional<int> CommandPlan::integer(const std::string& flag) const {
  auto it = params.find(flag);
  if (it == params.end()) return std::nullopt;
  int v = 0;
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("--" + flag + " expects an integer, got '" + s + "'");
  return v;
}

CommandPlan parse(std::span<const std::string> args, std::istream& in) {
  CLI::App app{"Sphere systems, partition links and the spine of outer space", "nsphere-cli"};
  app.require_subcommand(1);
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::string> formats;
  for (const auto& sc : schemas()) {
    auto* sub = app.add_subcommand(sc.name, sc.summary);
    auto& bucket = values[sc.name];
    for (const auto& flag : sc.required) sub->add_option("--" + flag, bucket[flag], help_for(flag))->required();
    for (const auto& flag : sc.optional) sub->add_option("--" + flag, bucket[flag], help_for(flag));
    std::vector<std::string> allowed = {"json", "text"};
    if (sc.dot) allowed.push_back("dot");
    sub->add_option("--format", formats[sc.name], "output format")->check(CLI::IsMember(allowed));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    throw HelpRequested{subs.empty() ? app.help() : subs.front()->help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto* chosen = app.get_subcommands().front();
  CommandPlan plan;
  for (const auto& sc : schemas()) {
    if (chosen->get_name() != sc.name) continue;
    plan.subcommand = sc.cmd;
    for (const auto& [flag, value] : values[sc.name]) {
      if (chosen->count("--" + flag) > 0) plan.params[flag] = value;
    }
    const auto& f = formats[sc.name];
    plan.format = f == "dot" ? Format::Dot : f == "text" ? Format::Text : Format::Json;
  }
  for (const auto& flag : kIntegerFlags) plan.integer(flag);
  if (plan.params.contains("m") && plan.params.contains("max-m"))
    throw UsageError("--m and --max-m are mutually exclusive");

  if (auto it = plan.params.find("input"); it != plan.params.end()) {
    try {
      plan.input = io::parse_json(read_payload(it->second, in));
    } catch (const UsageError&) {
      throw;
    } catch (const InputError& e) {
      throw UsageError(std::string("--input: ") + e.what());
    }
  }
  return plan;
}

Outcome execute(const CommandPlan& plan) {
  const auto& sc = schema_of(plan.subcommand);
  Outcome outcome;
  try {
    Result r = dispatch(plan);
    if (plan.format == Format::Dot) {
      outcome.out = r.dot;
      return outcome;
    }
    r.data["paper_anchor"] = sc.anchor;
    if (plan.format == Format::Text) {
      std::ostringstream os;
      render_text(r.data, os);
      outcome.out = os.str();
    } else {
      outcome.out = r.data.dump(2) + "\n";
    }
  } catch (const HypothesisError& e) {
    outcome.exit_code = 2;
    outcome.err = std::string("error: ") + e.what() + "\n";
    json j = {{"paper_anchor", sc.anchor}, {"error", "hypothesis"}, {"message", e.what()}};
    outcome.out = j.dump(2) + "\n";
  } catch (const SearchLimitError& e) {
    outcome.exit_code = 1;
    outcome.err = std::string("search limit: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    outcome.exit_code = 1;
    outcome.err = std::string("invalid input: ") + e.what() + "\n";
  }
  return outcome;
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    auto plan = parse(args, in);
    auto outcome = execute(plan);
    out << outcome.out;
    err << outcome.err;
    return outcome.exit_code;
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\nrun with --help for the list of subcommands and flags\n";
    return 1;
  }
}

}  // namespace nsphere::cli
