#include "nsphere/io.hpp"

#include <map>
#include <sstream>

#include "nsphere/errors.hpp"

namespace nsphere::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const GraphOfGroups& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"rank", v.rank}});
  json es = json::array();
  for (const auto& e : g.edges()) {
    es.push_back({{"id", e.id},
                  {"from", g.vertices()[e.from].id},
                  {"to", g.vertices()[e.to].id},
                  {"loop", e.is_loop()}});
  }
  return {{"vertices", vs}, {"edges", es}};
}

GraphOfGroups graph_from_json(const json& j) {
  return guarded("graph", [&] {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
      throw InputError("graph JSON needs \"vertices\" and \"edges\"");
    }
    std::vector<VertexSpec> vs;
    std::map<std::string, std::size_t> index;
    for (const auto& v : j.at("vertices")) {
      VertexSpec spec{v.at("id").get<std::string>(), v.value("rank", 0)};
      index.emplace(spec.id, vs.size());
      vs.push_back(std::move(spec));
    }
    std::vector<EdgeSpec> es;
    for (const auto& e : j.at("edges")) {
      const auto id = e.at("id").get<std::string>();
      const auto from = index.find(e.at("from").get<std::string>());
      const auto to = index.find(e.at("to").get<std::string>());
      if (from == index.end() || to == index.end()) throw InputError("edge '" + id + "' references a missing vertex");
      EdgeSpec spec{id, from->second, to->second};
      if (e.contains("loop") && e.at("loop").get<bool>() != spec.is_loop()) {
        throw InputError("edge '" + id + "' has an inconsistent \"loop\" flag");
      }
      es.push_back(std::move(spec));
    }
    return GraphOfGroups(std::move(vs), std::move(es));
  });
}

std::string to_dot(const GraphOfGroups& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(name) << "\" {\n";
  for (const auto& v : g.vertices()) {
    out << "  \"" << dot_escape(v.id) << "\" [label=\"" << dot_escape(v.id) << " (rank " << v.rank << ")\"];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  \"" << dot_escape(g.vertices()[e.from].id) << "\" -- \"" << dot_escape(g.vertices()[e.to].id)
        << "\" [label=\"" << dot_escape(e.id) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

json to_json(const SystemClassification& c) {
  json j{{"total_rank", c.total_rank},
         {"reduced", c.is_reduced},
         {"simple", c.is_simple},
         {"separating_edges", c.separating_edges}};
  j["nonreduced_witness"] = c.nonreduced_witness ? json(*c.nonreduced_witness) : json(nullptr);
  return j;
}

json to_json(const SphereSystemBlueprint& bp) {
  json pieces = json::array();
  for (const auto& p : bp.pieces) {
    pieces.push_back({{"vertex", p.vertex}, {"copies_of_s2xs1", p.copies_of_s2xs1}, {"punctures", p.punctures}});
  }
  json gluings = json::array();
  for (const auto& g : bp.gluings) gluings.push_back({{"edge", g.edge}, {"punctures", {g.first, g.second}}});
  return {{"pieces", pieces}, {"gluings", gluings}};
}

json to_json(const std::vector<Fault>& faults) {
  json out = json::array();
  for (const auto& f : faults) out.push_back({{"edge", f.edge}, {"fault", f.kind}});
  return out;
}

json to_json(const WhiteheadAuto& phi) {
  json j{{"kind", phi.kind() == AutoKind::TypeI ? "I" : "II"}, {"rank", phi.rank()}, {"text", phi.describe()}};
  return j;
}

json to_json(const Minimization& m) {
  json trace = json::array();
  for (const auto& phi : m.trace) trace.push_back(to_json(phi));
  return {{"min_word", m.min_word.to_string()},
          {"cyclic_length", m.min_word.size()},
          {"trace", trace},
          {"plateau_states", m.plateau_states}};
}

json to_json(const PrimitivityResult& r) {
  json cert = json::array();
  for (const auto& phi : r.certificate) cert.push_back(to_json(phi));
  return {{"primitive", r.primitive},
          {"min_word", r.min_word.to_string()},
          {"cyclic_length", r.min_word.size()},
          {"certificate", cert}};
}

json to_json(const Partition& p) {
  json side = json::array();
  for (BoundaryLabel l : p.side()) side.push_back(to_string(l));
  return {{"n", p.n()}, {"side", side}};
}

Partition partition_from_json(const json& j) {
  return guarded("partition", [&] {
    std::vector<BoundaryLabel> side;
    for (const auto& s : j.at("side")) side.push_back(parse_label(s.get<std::string>()));
    return Partition::from_side(j.at("n").get<int>(), side);
  });
}

json to_json(const LinkComplex& c) {
  json vs = json::array();
  for (const auto& p : c.vertices()) vs.push_back(to_json(p));
  json es = json::array();
  for (const auto& [a, b] : c.edges()) es.push_back({a, b});
  return {{"n", c.n()}, {"vertices", vs}, {"edges", es}};
}

LinkComplex complex_from_json(const json& j) {
  return guarded("complex", [&] {
    std::vector<Partition> vs;
    for (const auto& v : j.at("vertices")) vs.push_back(partition_from_json(v));
    const int n = j.contains("n") ? j.at("n").get<int>() : (vs.empty() ? 1 : vs.front().n());
    LinkComplex c(n, std::move(vs));
    std::vector<std::pair<std::size_t, std::size_t>> listed;
    for (const auto& e : j.at("edges")) listed.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    if (listed != c.edges()) throw InputError("complex edges disagree with partition compatibility");
    return c;
  });
}

json to_json(const LinkComplexReport& r) {
  json j{{"n", r.n}, {"vertex_count", r.vertex_count}, {"edge_count", r.edge_count}};
  if (r.maximal_simplex_sizes) {
    json sizes = json::object();
    for (const auto& [size, count] : *r.maximal_simplex_sizes) sizes[std::to_string(size)] = count;
    j["maximal_simplex_sizes"] = sizes;
  } else {
    j["maximal_simplex_sizes"] = nullptr;
  }
  j["simplex_count"] = r.simplex_count ? json(*r.simplex_count) : json(nullptr);
  j["flag_consistent"] = r.flag_consistent ? json(*r.flag_consistent) : json(nullptr);
  return j;
}

std::string to_dot(const LinkComplex& c) {
  std::ostringstream out;
  out << "graph \"link_n" << c.n() << "\" {\n";
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    out << "  " << i << " [label=\"" << join_ints(homology_class(c.vertices()[i])) << "\\n"
        << c.vertices()[i].to_string() << "\"];\n";
  }
  for (const auto& [a, b] : c.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

json to_json(const WitnessComponent& w) {
  return {{"vertex", w.vertex}, {"rank_k", w.rank_k}, {"boundary", w.boundary}, {"S1", w.s1}, {"S2", w.s2}};
}

WitnessComponent witness_from_json(const json& j) {
  return guarded("witness", [&] {
    WitnessComponent w;
    w.vertex = j.at("vertex").get<std::string>();
    w.rank_k = j.at("rank_k").get<int>();
    w.boundary = j.at("boundary").get<std::vector<std::string>>();
    w.s1 = j.at("S1").get<std::string>();
    w.s2 = j.at("S2").get<std::string>();
    return w;
  });
}

namespace {

json side_to_json(std::uint8_t side) {
  json out = json::array();
  if (side & kS1) out.push_back("S1");
  if (side & kS2) out.push_back("S2");
  if (side & kAPlus) out.push_back("A+");
  if (side & kAMinus) out.push_back("A-");
  return out;
}

std::uint8_t side_from_json(const json& j) {
  std::uint8_t side = 0;
  for (const auto& s : j) {
    const auto name = s.get<std::string>();
    if (name == "S1") side |= kS1;
    else if (name == "S2") side |= kS2;
    else if (name == "A+") side |= kAPlus;
    else if (name == "A-") side |= kAMinus;
    else throw InputError("unknown boundary '" + name + "' in piece side");
  }
  return side;
}

}  // namespace

json to_json(const TubeCertificate& c) {
  json pieces = json::array();
  for (const auto& p : c.pieces) {
    json separates = p.separates_s1_s2() ? json{"S1", "S2"} : json::array();
    pieces.push_back({{"separates", separates},
                      {"side", side_to_json(p.s1_side)},
                      {"attaches", {to_string(p.start), to_string(p.finish)}}});
  }
  return {{"m", c.m}, {"normal", c.normal}, {"witness", to_json(c.witness)}, {"pieces", pieces}};
}

TubeCertificate certificate_from_json(const json& j) {
  return guarded("certificate", [&] {
    TubeCertificate c;
    c.m = j.at("m").get<int>();
    c.normal = j.value("normal", false);
    if (j.contains("witness")) c.witness = witness_from_json(j.at("witness"));
    for (const auto& p : j.at("pieces")) {
      const auto& ends = p.at("attaches");
      TubePiece piece{parse_tube_end(ends.at(0).get<std::string>()), parse_tube_end(ends.at(1).get<std::string>()),
                      side_from_json(p.at("side"))};
      c.pieces.push_back(piece);
    }
    return c;
  });
}

json to_json(const FamilyReport& r) {
  return {{"distinct", r.distinct}, {"size", r.size}, {"repeated_m", r.repeated_m}, {"rationale", r.rationale}};
}

json to_json(const CollapsePoset& p) {
  json nodes = json::array();
  for (std::size_t i = 0; i < p.nodes.size(); ++i) nodes.push_back({{"id", i}, {"graph", to_json(p.nodes[i].graph())}});
  json arrows = json::array();
  for (const auto& a : p.arrows) arrows.push_back({{"from", a.from}, {"to", a.to}, {"forest_size", a.forest_size}});
  return {{"n", p.n}, {"nodes", nodes}, {"arrows", arrows}};
}

CollapsePoset poset_from_json(const json& j) {
  return guarded("poset", [&] {
    CollapsePoset p;
    p.n = j.value("n", 0);
    for (const auto& node : j.at("nodes")) {
      if (node.at("id").get<std::size_t>() != p.nodes.size()) throw InputError("poset node ids must be 0..N-1 in order");
      p.nodes.emplace_back(graph_from_json(node.at("graph")));
    }
    for (const auto& a : j.at("arrows")) {
      CollapseArrow arrow{a.at("from").get<std::size_t>(), a.at("to").get<std::size_t>(),
                          a.at("forest_size").get<std::size_t>()};
      if (arrow.from >= p.nodes.size() || arrow.to >= p.nodes.size()) throw InputError("poset arrow out of range");
      p.arrows.push_back(arrow);
    }
    if (p.n == 0 && !p.nodes.empty()) p.n = p.nodes.front().rank_n();
    return p;
  });
}

std::string to_dot(const CollapsePoset& p) {
  std::ostringstream out;
  out << "digraph \"spine_n" << p.n << "\" {\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& g = p.nodes[i].graph();
    out << "  " << i << " [label=\"" << i << ": V=" << g.vertex_count() << " E=" << g.edge_count() << "\"];\n";
  }
  // Hasse diagram: single-edge collapses are exactly the covering relations.
  for (const auto& a : p.arrows) {
    if (a.forest_size == 1) out << "  " << a.from << " -> " << a.to << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nsphere::io
