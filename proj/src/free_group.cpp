#include "nsphere/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nsphere/errors.hpp"

namespace nsphere {

Word::Word(int rank) : rank_(rank) {
  if (rank < 1) throw InputError("free group rank must be positive");
}

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {}

Word free_reduce(std::span<const Letter> raw, int rank) {
  if (rank < 1) throw InputError("free group rank must be positive");
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l.generator < 1 || l.generator > rank) {
      throw InputError("generator index " + std::to_string(l.generator) + " out of range 1.." +
                       std::to_string(rank));
    }
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(rank, std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverted());
  return Word(rank_, std::move(out));
}

Word Word::concat(const Word& other) const {
  if (other.rank_ != rank_) throw InputError("rank mismatch in word product");
  std::vector<Letter> raw(letters_);
  raw.insert(raw.end(), other.letters_.begin(), other.letters_.end());
  return free_reduce(raw, rank_);
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i].inverse ? 'A' : 'a';
    out += std::to_string(letters_[i].generator);
  }
  return out;
}

std::string Word::to_compact() const {
  if (rank_ > 26) throw InputError("compact word form needs rank <= 26");
  std::string out;
  for (Letter l : letters_) {
    char c = static_cast<char>('a' + l.generator - 1);
    out += l.inverse ? static_cast<char>(std::toupper(c)) : c;
  }
  return out;
}

Word Word::parse(std::string_view text, int rank) {
  std::vector<Letter> raw;
  bool tokens = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
  if (tokens) {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A') ||
          !std::all_of(tok.begin() + 1, tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
        throw InputError("malformed word token '" + tok + "'");
      }
      int idx = 0;
      try {
        idx = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw InputError("malformed word token '" + tok + "'");
      }
      raw.push_back({idx, tok[0] == 'A'});
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw InputError(std::string("malformed word character '") + c + "'");
      }
      bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
      raw.push_back({std::tolower(static_cast<unsigned char>(c)) - 'a' + 1, inv});
    }
  }
  if (rank <= 0) {
    rank = 1;
    for (Letter l : raw) rank = std::max(rank, l.generator);
  }
  return free_reduce(raw, rank);
}

Word cyclic_normal_form(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                           letters.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<Letter> best = core;
  std::vector<Letter> rot = core;
  for (std::size_t i = 1; i < core.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return free_reduce(best, w.rank());
}

std::vector<long> exponent_sums(const Word& w) {
  std::vector<long> sums(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) sums[static_cast<std::size_t>(l.generator - 1)] += l.inverse ? -1 : 1;
  return sums;
}

}  // namespace nsphere
