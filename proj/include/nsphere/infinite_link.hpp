#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsphere/dual_graph.hpp"

namespace nsphere {

// A complementary piece with nontrivial fundamental group and at least two
// boundary spheres coming from distinct spheres of the system.
struct WitnessComponent {
  std::string vertex;
  int rank_k = 0;
  std::vector<std::string> boundary;  // edge-end labels "vertex:edge:slot"
  std::string s1;
  std::string s2;

  bool operator==(const WitnessComponent&) const = default;
};

// Throws HypothesisError if the system is reduced, has a separating sphere,
// or does not have exactly n spheres.
WitnessComponent find_witness(const GraphOfGroups& g, int n);

// Boundary spheres of the piece cut open along A, as bits.
enum Boundary : std::uint8_t { kS1 = 1, kS2 = 2, kAPlus = 4, kAMinus = 8 };

// B is the base sphere; S1' is the sphere parallel to S1.
enum class TubeEnd { B, APlus, AMinus, S1Prime };

std::string to_string(TubeEnd e);
TubeEnd parse_tube_end(const std::string& s);

struct TubePiece {
  TubeEnd start = TubeEnd::B;
  TubeEnd finish = TubeEnd::AMinus;
  std::uint8_t s1_side = kS1;  // boundaries on the same side as S1

  bool separates_s1_s2() const { return (s1_side & kS1) != 0 && (s1_side & kS2) == 0; }
  bool operator==(const TubePiece&) const = default;
};

struct TubeCertificate {
  int m = 0;
  std::vector<TubePiece> pieces;
  bool normal = false;
  WitnessComponent witness;

  bool operator==(const TubeCertificate&) const = default;
};

// Piece sequence for the sphere whose tube crosses A exactly m times.
// Throws InputError for m < 1.
TubeCertificate generate_tm(const WitnessComponent& w, int m);

// Recomputes the normality conditions from the pieces alone: m + 1 pieces,
// caps at both ends, consecutive pieces meeting opposite sides of A with a
// consistent crossing direction, and every piece separating S1 from S2.
bool check_normal(const TubeCertificate& c);

// The same tube read from the other end, with A+ and A- exchanged.
TubeCertificate reverse_tube(const TubeCertificate& c);

struct FamilyReport {
  bool distinct = false;
  std::size_t size = 0;
  std::vector<int> repeated_m;
  std::vector<std::string> rationale;
};

// True iff the crossing numbers are pairwise distinct. Throws HypothesisError
// when a certificate is not normal or the witnesses differ.
FamilyReport verify_distinct_family(std::span<const TubeCertificate> certs);

}  // namespace nsphere
