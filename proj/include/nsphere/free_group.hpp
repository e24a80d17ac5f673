#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsphere {

// A generator a_i (inverse == false) or its inverse. Ordered by generator
// index, then + before -.
struct Letter {
  int generator = 1;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  auto operator<=>(const Letter&) const = default;
};

// Freely reduced word in the free group of rank `rank`.
class Word {
 public:
  explicit Word(int rank = 1);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word concat(const Word& other) const;

  // Tokens "a1 A1 a2 ..." separated by single spaces.
  std::string to_string() const;
  // "abA" form; requires rank <= 26.
  std::string to_compact() const;

  // Accepts whitespace-separated tokens ("a1 A2", capital = inverse) or the
  // compact form ("abA"). rank <= 0 infers the rank from the largest index.
  static Word parse(std::string_view text, int rank = 0);

  bool operator==(const Word&) const = default;

 private:
  friend Word free_reduce(std::span<const Letter> raw, int rank);
  Word(int rank, std::vector<Letter> letters);

  int rank_;
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> raw, int rank);

// Freely and cyclically reduced, rotated to the lexicographically least
// rotation.
Word cyclic_normal_form(const Word& w);

std::vector<long> exponent_sums(const Word& w);

enum class AutoKind { TypeI, TypeII };

// Action of a type II automorphism with multiplier x on a generator y:
// fix y, left x^-1 y, right y x, conjugate x^-1 y x.
enum class Action { Fix, Left, Right, Conjugate };

class WhiteheadAuto {
 public:
  // images[i] is the image of generator i + 1; must be a signed permutation.
  static WhiteheadAuto permutation(std::vector<Letter> images);
  // actions[i] acts on generator i + 1; the multiplier's own slot must be Fix.
  static WhiteheadAuto multiplier(Letter x, std::vector<Action> actions);

  AutoKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::vector<Letter>& images() const { return images_; }
  Letter multiplier_letter() const { return multiplier_; }
  const std::vector<Action>& actions() const { return actions_; }

  bool is_identity() const;
  WhiteheadAuto inverse() const;
  // Image of a single letter, not yet reduced against neighbours.
  std::vector<Letter> image(Letter l) const;
  std::string describe() const;

  bool operator==(const WhiteheadAuto&) const = default;

 private:
  WhiteheadAuto() = default;

  AutoKind kind_ = AutoKind::TypeI;
  int rank_ = 1;
  std::vector<Letter> images_;
  Letter multiplier_{};
  std::vector<Action> actions_;
};

Word apply_auto(const WhiteheadAuto& phi, const Word& w);
Word apply_trace(std::span<const WhiteheadAuto> trace, const Word& w);

// All non-identity type II automorphisms in a fixed deterministic order.
std::vector<WhiteheadAuto> type_two_autos(int rank);
// All signed permutations, identity included.
std::vector<WhiteheadAuto> type_one_autos(int rank);

struct Minimization {
  Word min_word;
  std::vector<WhiteheadAuto> trace;
  std::size_t plateau_states = 0;
};

inline constexpr std::size_t kPlateauStateCap = 1'000'000;

// Descends by length-reducing type II automorphisms. When none applies, the
// equal-length plateau is searched breadth first for a word that admits one.
// Throws SearchLimitError when the plateau exceeds `state_cap` words.
Minimization whitehead_minimize(const Word& w, std::size_t state_cap = kPlateauStateCap);

struct PrimitivityResult {
  bool primitive = false;
  Word min_word;
  std::vector<WhiteheadAuto> certificate;
};

PrimitivityResult is_primitive(const Word& w, std::size_t state_cap = kPlateauStateCap);

}  // namespace nsphere
