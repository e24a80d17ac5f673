#include "nsphere/infinite_link.hpp"

#include <algorithm>
#include <map>

#include "nsphere/errors.hpp"

namespace nsphere {

namespace {

bool on_a(TubeEnd e) { return e == TubeEnd::APlus || e == TubeEnd::AMinus; }

TubeEnd opposite(TubeEnd e) {
  switch (e) {
    case TubeEnd::APlus: return TubeEnd::AMinus;
    case TubeEnd::AMinus: return TubeEnd::APlus;
    default: return e;
  }
}

std::uint8_t swap_a(std::uint8_t side) {
  std::uint8_t out = side & (kS1 | kS2);
  if (side & kAPlus) out |= kAMinus;
  if (side & kAMinus) out |= kAPlus;
  return out;
}

}  // namespace

std::string to_string(TubeEnd e) {
  switch (e) {
    case TubeEnd::B: return "B";
    case TubeEnd::APlus: return "A+";
    case TubeEnd::AMinus: return "A-";
    case TubeEnd::S1Prime: return "S1'";
  }
  return "?";
}

TubeEnd parse_tube_end(const std::string& s) {
  for (TubeEnd e : {TubeEnd::B, TubeEnd::APlus, TubeEnd::AMinus, TubeEnd::S1Prime}) {
    if (to_string(e) == s) return e;
  }
  throw InputError("unknown tube end '" + s + "'");
}

WitnessComponent find_witness(const GraphOfGroups& g, int n) {
  if (static_cast<int>(g.edge_count()) != n) {
    throw HypothesisError("system has " + std::to_string(g.edge_count()) + " spheres, expected n = " +
                          std::to_string(n));
  }
  const SystemClassification c = classify(g, n);
  if (c.is_reduced) throw HypothesisError("system is reduced; its link is finite");
  if (!c.separating_edges.empty()) {
    throw HypothesisError("sphere " + c.separating_edges.front() + " is separating");
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const VertexSpec& vs = g.vertices()[v];
    if (vs.rank < 1) continue;
    WitnessComponent w{vs.id, vs.rank, {}, {}, {}};
    std::vector<std::string> distinct_ends;
    for (const auto& e : g.edges()) {
      const std::string base = vs.id + ":" + e.id + ":";
      if (e.from == v) w.boundary.push_back(base + "0");
      if (e.to == v) w.boundary.push_back(base + "1");
      if (!e.is_loop() && (e.from == v || e.to == v)) distinct_ends.push_back(base + (e.from == v ? "0" : "1"));
    }
    if (distinct_ends.size() < 2) continue;
    w.s1 = distinct_ends[0];
    w.s2 = distinct_ends[1];
    return w;
  }
  throw HypothesisError("no non-simply-connected component with two boundary spheres from distinct spheres");
}

TubeCertificate generate_tm(const WitnessComponent& w, int m) {
  if (m < 1) throw InputError("tube crossing number m must be at least 1");
  TubeCertificate c;
  c.m = m;
  c.witness = w;
  // Leaves B toward A-, re-enters from A+ after each crossing, and finally
  // runs from A+ to the copy of S1.
  c.pieces.push_back({TubeEnd::B, TubeEnd::AMinus, kS1 | kAPlus});
  for (int k = 1; k < m; ++k) c.pieces.push_back({TubeEnd::APlus, TubeEnd::AMinus, kS1 | kAPlus});
  c.pieces.push_back({TubeEnd::APlus, TubeEnd::S1Prime, kS1});
  c.normal = check_normal(c);
  return c;
}

bool check_normal(const TubeCertificate& c) {
  if (c.m < 1 || c.pieces.size() != static_cast<std::size_t>(c.m) + 1) return false;
  const TubeEnd head = c.pieces.front().start;
  const TubeEnd tail = c.pieces.back().finish;
  const bool caps = (head == TubeEnd::B && tail == TubeEnd::S1Prime) ||
                    (head == TubeEnd::S1Prime && tail == TubeEnd::B);
  if (!caps) return false;
  std::optional<TubeEnd> direction;
  for (std::size_t k = 0; k + 1 < c.pieces.size(); ++k) {
    const TubeEnd out = c.pieces[k].finish;
    const TubeEnd in = c.pieces[k + 1].start;
    if (!on_a(out) || in != opposite(out)) return false;
    if (direction && *direction != out) return false;
    direction = out;
  }
  return std::all_of(c.pieces.begin(), c.pieces.end(), [](const TubePiece& p) { return p.separates_s1_s2(); });
}

TubeCertificate reverse_tube(const TubeCertificate& c) {
  TubeCertificate r = c;
  r.pieces.clear();
  for (auto it = c.pieces.rbegin(); it != c.pieces.rend(); ++it) {
    r.pieces.push_back({opposite(it->finish), opposite(it->start), swap_a(it->s1_side)});
  }
  r.normal = check_normal(r);
  return r;
}

FamilyReport verify_distinct_family(std::span<const TubeCertificate> certs) {
  FamilyReport r;
  r.size = certs.size();
  std::map<int, int> seen;
  for (const auto& c : certs) {
    if (!c.normal || !check_normal(c)) {
      throw HypothesisError("certificate with m = " + std::to_string(c.m) + " is not in normal form");
    }
    if (!(c.witness == certs.front().witness)) throw HypothesisError("certificates use different witnesses");
    if (++seen[c.m] == 2) r.repeated_m.push_back(c.m);
  }
  r.distinct = r.repeated_m.empty();
  r.rationale = {
      "model axiom (reconstruction): in normal position the crossing number m with A is the minimal "
      "intersection number, an isotopy invariant, so distinct m give distinct link vertices",
      "each piece separates S1 from S2, so every member is non-separating in the ambient manifold",
  };
  return r;
}

}  // namespace nsphere
