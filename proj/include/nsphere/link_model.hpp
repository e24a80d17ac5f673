#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsphere {

// Boundary sphere i+ or i- of the manifold cut open along a reduced system.
// Labels are ordered 1+ < 1- < 2+ < 2- < ...
struct BoundaryLabel {
  int index = 1;
  bool minus = false;

  auto operator<=>(const BoundaryLabel&) const = default;
};

std::string to_string(BoundaryLabel l);
BoundaryLabel parse_label(std::string_view text);

// Labels fit in a 32-bit mask.
inline constexpr int kMaxPartitionRank = 15;

// Unordered split of the 2n boundary labels into two nonempty parts, stored
// by the part containing 1+.
class Partition {
 public:
  // `side` may be either part; the result is canonicalized.
  static Partition from_side(int n, std::span<const BoundaryLabel> side);
  static Partition from_mask(int n, std::uint32_t mask);

  int n() const { return n_; }
  std::uint32_t side_mask() const { return side_; }
  std::uint32_t other_mask() const { return full_mask() ^ side_; }
  std::uint32_t full_mask() const { return (n_ >= 16) ? ~0u : ((1u << (2 * n_)) - 1u); }

  std::vector<BoundaryLabel> side() const;
  std::vector<BoundaryLabel> other() const;
  std::string to_string() const;

  // Swaps i+ and i- for every i.
  Partition swap_signs() const;

  bool operator==(const Partition&) const = default;
  // Lexicographic on the canonical side's sorted label list.
  bool operator<(const Partition& o) const;

 private:
  Partition(int n, std::uint32_t side) : n_(n), side_(side) {}
  int n_;
  std::uint32_t side_;
};

struct Admissibility {
  bool admissible = false;
  std::string reason;  // "admissible", "boundary-parallel" or "separating"
};

Admissibility is_admissible(const Partition& p);

inline constexpr int kMaxEnumerationRank = 10;

// Admissible partitions in canonical order; 1 <= n <= kMaxEnumerationRank.
std::vector<Partition> enumerate_link_vertices(int n);

// Nested (laminar) partitions. Throws InputError when p == q or ranks differ.
bool are_compatible(const Partition& p, const Partition& q);

// +1 / -1 / 0 per index from the canonical side, normalized so the first
// nonzero entry is +1.
std::vector<int> homology_class(const Partition& p);

// Finite link of a reduced simplex: admissible partitions joined when
// compatible; higher simplices are the cliques (flag completion).
class LinkComplex {
 public:
  LinkComplex(int n, std::vector<Partition> vertices);

  int n() const { return n_; }
  const std::vector<Partition>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a][b] != 0; }

  // Calls visit(clique) for every nonempty clique, vertices increasing.
  template <class Visit>
  void for_each_simplex(Visit&& visit) const {
    std::vector<std::size_t> clique;
    for (std::size_t v = 0; v < vertices_.size(); ++v) extend(clique, v, visit);
  }

  std::vector<std::vector<std::size_t>> maximal_simplices() const;
  std::size_t clique_number() const;
  std::size_t clique_number_containing(std::size_t v) const;

 private:
  template <class Visit>
  void extend(std::vector<std::size_t>& clique, std::size_t v, Visit& visit) const {
    clique.push_back(v);
    visit(std::as_const(clique));
    for (std::size_t w = v + 1; w < vertices_.size(); ++w) {
      bool ok = true;
      for (std::size_t u : clique) {
        if (!adj_[u][w]) {
          ok = false;
          break;
        }
      }
      if (ok) extend(clique, w, visit);
    }
    clique.pop_back();
  }

  int n_;
  std::vector<Partition> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<char>> adj_;
};

inline constexpr int kMaxLinkComplexRank = 6;
inline constexpr int kMaxSimplexCensusRank = 4;

LinkComplex build_link_complex(int n);

struct LinkComplexReport {
  int n = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  // Maximal-simplex census and exhaustive joint-realizability check; only
  // computed for n <= kMaxSimplexCensusRank.
  std::optional<std::map<std::size_t, std::size_t>> maximal_simplex_sizes;
  std::optional<std::size_t> simplex_count;
  std::optional<bool> flag_consistent;
};

LinkComplexReport summarize(const LinkComplex& complex);

// Builds the leaf-labelled tree whose edges would carry the given splits and
// checks that it reproduces exactly that family of splits.
bool jointly_realizable(std::span<const Partition> family);

// Largest family: a reduced system plus pairwise compatible admissible
// partitions; 2 <= n <= 4.
int max_simple_star_size(int n);

}  // namespace nsphere
