#include "nsphere/link_model.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "nsphere/errors.hpp"

namespace nsphere {

namespace {

std::uint32_t label_bit(BoundaryLabel l) { return 1u << (2 * (l.index - 1) + (l.minus ? 1 : 0)); }

BoundaryLabel bit_label(int bit) { return {bit / 2 + 1, (bit % 2) != 0}; }

std::vector<BoundaryLabel> mask_labels(std::uint32_t mask) {
  std::vector<BoundaryLabel> out;
  for (int b = 0; b < 32; ++b) {
    if (mask & (1u << b)) out.push_back(bit_label(b));
  }
  return out;
}

void check_rank(int n, int max) {
  if (n < 1 || n > max) {
    throw InputError("rank n = " + std::to_string(n) + " outside supported range 1.." + std::to_string(max));
  }
}

bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

// Bron-Kerbosch with pivoting over an adjacency matrix.
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<std::size_t>& r,
                   std::vector<std::size_t> p, std::vector<std::size_t> x,
                   const std::function<void(const std::vector<std::size_t>&)>& report) {
  if (p.empty() && x.empty()) {
    report(r);
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* pool : {&p, &x}) {
    for (std::size_t u : *pool) {
      std::size_t c = 0;
      for (std::size_t v : p) c += adj[u][v] ? 1 : 0;
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
  }
  std::vector<std::size_t> candidates;
  for (std::size_t v : p) {
    if (!adj[pivot][v]) candidates.push_back(v);
  }
  for (std::size_t v : candidates) {
    std::vector<std::size_t> np, nx;
    for (std::size_t u : p) {
      if (adj[v][u]) np.push_back(u);
    }
    for (std::size_t u : x) {
      if (adj[v][u]) nx.push_back(u);
    }
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(np), std::move(nx), report);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::string to_string(BoundaryLabel l) { return std::to_string(l.index) + (l.minus ? "-" : "+"); }

BoundaryLabel parse_label(std::string_view text) {
  if (text.size() < 2 || (text.back() != '+' && text.back() != '-')) {
    throw InputError("malformed boundary label '" + std::string(text) + "'");
  }
  int index = 0;
  for (char c : text.substr(0, text.size() - 1)) {
    if (c < '0' || c > '9') throw InputError("malformed boundary label '" + std::string(text) + "'");
    index = index * 10 + (c - '0');
    if (index > 1000) throw InputError("boundary label index too large");
  }
  if (index < 1) throw InputError("boundary label index must be positive");
  return {index, text.back() == '-'};
}

Partition Partition::from_mask(int n, std::uint32_t mask) {
  check_rank(n, kMaxPartitionRank);
  const std::uint32_t full = (1u << (2 * n)) - 1u;
  if ((mask & ~full) != 0) throw InputError("partition mask has labels beyond rank");
  if (mask == 0 || mask == full) throw InputError("partition needs two nonempty parts");
  if (!(mask & 1u)) mask = full ^ mask;
  return Partition(n, mask);
}

Partition Partition::from_side(int n, std::span<const BoundaryLabel> side) {
  check_rank(n, kMaxPartitionRank);
  std::uint32_t mask = 0;
  for (BoundaryLabel l : side) {
    if (l.index < 1 || l.index > n) throw InputError("boundary label " + nsphere::to_string(l) + " out of range");
    if (mask & label_bit(l)) throw InputError("duplicate boundary label " + nsphere::to_string(l));
    mask |= label_bit(l);
  }
  return from_mask(n, mask);
}

std::vector<BoundaryLabel> Partition::side() const { return mask_labels(side_); }
std::vector<BoundaryLabel> Partition::other() const { return mask_labels(other_mask()); }

std::string Partition::to_string() const {
  std::string s = "{";
  auto put = [&](const std::vector<BoundaryLabel>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (i) s += ',';
      s += nsphere::to_string(ls[i]);
    }
  };
  put(side());
  s += '|';
  put(other());
  return s + "}";
}

Partition Partition::swap_signs() const {
  std::uint32_t swapped = 0;
  for (int i = 0; i < n_; ++i) {
    if (side_ & (1u << (2 * i))) swapped |= 1u << (2 * i + 1);
    if (side_ & (1u << (2 * i + 1))) swapped |= 1u << (2 * i);
  }
  return from_mask(n_, swapped);
}

bool Partition::operator<(const Partition& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  std::uint32_t a = side_;
  std::uint32_t b = o.side_;
  while (a && b) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Admissibility is_admissible(const Partition& p) {
  const auto side = std::popcount(p.side_mask());
  const auto other = std::popcount(p.other_mask());
  if (side < 2 || other < 2) return {false, "boundary-parallel"};
  for (int i = 0; i < p.n(); ++i) {
    const bool plus = (p.side_mask() >> (2 * i)) & 1u;
    const bool minus = (p.side_mask() >> (2 * i + 1)) & 1u;
    if (plus != minus) return {true, "admissible"};
  }
  return {false, "separating"};
}

std::vector<Partition> enumerate_link_vertices(int n) {
  check_rank(n, kMaxEnumerationRank);
  std::vector<Partition> out;
  // Canonical sides are exactly the masks with bit 0 set, excluding the full set.
  const std::uint32_t rest_bits = 2 * static_cast<std::uint32_t>(n) - 1;
  for (std::uint32_t rest = 0; rest + 1 < (1u << rest_bits); ++rest) {
    const Partition p = Partition::from_mask(n, (rest << 1) | 1u);
    if (is_admissible(p).admissible) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool are_compatible(const Partition& p, const Partition& q) {
  if (p.n() != q.n()) throw InputError("partitions of different rank");
  if (p == q) throw InputError("compatibility of a partition with itself is undefined");
  const std::uint32_t xp = p.side_mask(), yp = p.other_mask();
  const std::uint32_t xq = q.side_mask(), yq = q.other_mask();
  return subset(xp, xq) || subset(xp, yq) || subset(yp, xq) || subset(yp, yq);
}

std::vector<int> homology_class(const Partition& p) {
  std::vector<int> h(static_cast<std::size_t>(p.n()), 0);
  for (int i = 0; i < p.n(); ++i) {
    const bool plus = (p.side_mask() >> (2 * i)) & 1u;
    const bool minus = (p.side_mask() >> (2 * i + 1)) & 1u;
    h[static_cast<std::size_t>(i)] = plus == minus ? 0 : (plus ? 1 : -1);
  }
  for (int c : h) {
    if (c == 0) continue;
    if (c < 0) {
      for (int& d : h) d = -d;
    }
    break;
  }
  return h;
}

LinkComplex::LinkComplex(int n, std::vector<Partition> vertices) : n_(n), vertices_(std::move(vertices)) {
  const std::size_t nv = vertices_.size();
  adj_.assign(nv, std::vector<char>(nv, 0));
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      if (are_compatible(vertices_[i], vertices_[j])) {
        adj_[i][j] = adj_[j][i] = 1;
        edges_.emplace_back(i, j);
      }
    }
  }
}

std::vector<std::vector<std::size_t>> LinkComplex::maximal_simplices() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> r, p(vertices_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  bron_kerbosch(adj_, r, p, {}, [&](const std::vector<std::size_t>& c) {
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t LinkComplex::clique_number() const {
  std::size_t best = 0;
  std::vector<std::size_t> r, p(vertices_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  bron_kerbosch(adj_, r, p, {}, [&](const std::vector<std::size_t>& c) { best = std::max(best, c.size()); });
  return best;
}

std::size_t LinkComplex::clique_number_containing(std::size_t v) const {
  std::size_t best = 0;
  std::vector<std::size_t> r{v}, p;
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    if (adj_[v][u]) p.push_back(u);
  }
  bron_kerbosch(adj_, r, p, {}, [&](const std::vector<std::size_t>& c) { best = std::max(best, c.size()); });
  return best;
}

LinkComplex build_link_complex(int n) {
  check_rank(n, kMaxLinkComplexRank);
  return LinkComplex(n, enumerate_link_vertices(n));
}

bool jointly_realizable(std::span<const Partition> family) {
  if (family.empty()) return true;
  const int n = family.front().n();
  const std::uint32_t full = family.front().full_mask();
  // Root the tree at label 1+: every split contributes the part avoiding it.
  std::vector<std::uint32_t> sets;
  for (const auto& p : family) {
    if (p.n() != n) return false;
    sets.push_back(p.other_mask());
  }
  std::sort(sets.begin(), sets.end());
  if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) return false;

  // Parent of each set: the smallest strict superset, or the root.
  std::map<std::uint32_t, std::vector<std::uint32_t>> children;
  for (std::uint32_t s : sets) {
    std::uint32_t parent = full;
    for (std::uint32_t t : sets) {
      if (t != s && subset(s, t) && std::popcount(t) < std::popcount(parent)) parent = t;
    }
    children[parent].push_back(s);
  }
  // Siblings must be disjoint for the nesting to be a tree.
  for (const auto& [parent, kids] : children) {
    std::uint32_t seen = 0;
    for (std::uint32_t k : kids) {
      if (seen & k) return false;
      seen |= k;
    }
    if (!subset(seen, parent)) return false;
  }
  // Read the splits back off the tree: each non-root node's leaf set is its
  // own leaves plus those of its descendants.
  std::function<std::uint32_t(std::uint32_t)> leaves = [&](std::uint32_t node) {
    std::uint32_t own = node;
    auto it = children.find(node);
    if (it != children.end()) {
      for (std::uint32_t k : it->second) own &= ~k;
      for (std::uint32_t k : it->second) own |= leaves(k);
    }
    return own;
  };
  std::vector<std::uint32_t> recovered;
  for (const auto& [parent, kids] : children) {
    for (std::uint32_t k : kids) recovered.push_back(leaves(k));
  }
  std::sort(recovered.begin(), recovered.end());
  return recovered == sets;
}

LinkComplexReport summarize(const LinkComplex& complex) {
  LinkComplexReport r;
  r.n = complex.n();
  r.vertex_count = complex.vertices().size();
  r.edge_count = complex.edges().size();
  if (complex.n() > kMaxSimplexCensusRank) return r;

  std::map<std::size_t, std::size_t> sizes;
  for (const auto& s : complex.maximal_simplices()) ++sizes[s.size()];
  r.maximal_simplex_sizes = std::move(sizes);

  std::size_t count = 0;
  bool flag = true;
  std::vector<Partition> family;
  complex.for_each_simplex([&](const std::vector<std::size_t>& clique) {
    ++count;
    if (!flag) return;
    family.clear();
    for (std::size_t v : clique) family.push_back(complex.vertices()[v]);
    flag = jointly_realizable(family);
  });
  r.simplex_count = count;
  r.flag_consistent = flag;
  return r;
}

int max_simple_star_size(int n) {
  if (n < 2 || n > 4) throw InputError("max_simple_star_size supports 2 <= n <= 4");
  return n + static_cast<int>(build_link_complex(n).clique_number());
}

}  // namespace nsphere
