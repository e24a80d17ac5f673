#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "nsphere/errors.hpp"
#include "nsphere/free_group.hpp"

namespace nsphere {

namespace {

std::string letter_token(Letter l) {
  return std::string(l.inverse ? "A" : "a") + std::to_string(l.generator);
}

const char* action_name(Action a) {
  switch (a) {
    case Action::Fix: return "fix";
    case Action::Left: return "left";
    case Action::Right: return "right";
    case Action::Conjugate: return "conjugate";
  }
  return "?";
}

std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size());
  for (Letter l : w.letters()) key += static_cast<char>(2 * l.generator + (l.inverse ? 1 : 0));
  return key;
}

}  // namespace

WhiteheadAuto WhiteheadAuto::permutation(std::vector<Letter> images) {
  const int rank = static_cast<int>(images.size());
  if (rank < 1) throw InputError("type I automorphism needs at least one generator");
  std::vector<bool> seen(images.size(), false);
  for (Letter l : images) {
    if (l.generator < 1 || l.generator > rank || seen[static_cast<std::size_t>(l.generator - 1)]) {
      throw InputError("type I automorphism images must form a signed permutation");
    }
    seen[static_cast<std::size_t>(l.generator - 1)] = true;
  }
  WhiteheadAuto a;
  a.kind_ = AutoKind::TypeI;
  a.rank_ = rank;
  a.images_ = std::move(images);
  return a;
}

WhiteheadAuto WhiteheadAuto::multiplier(Letter x, std::vector<Action> actions) {
  const int rank = static_cast<int>(actions.size());
  if (x.generator < 1 || x.generator > rank) throw InputError("multiplier outside the generator range");
  if (actions[static_cast<std::size_t>(x.generator - 1)] != Action::Fix) {
    throw InputError("type II multiplier must be fixed by its own action");
  }
  WhiteheadAuto a;
  a.kind_ = AutoKind::TypeII;
  a.rank_ = rank;
  a.multiplier_ = x;
  a.actions_ = std::move(actions);
  return a;
}

bool WhiteheadAuto::is_identity() const {
  if (kind_ == AutoKind::TypeII) {
    return std::all_of(actions_.begin(), actions_.end(), [](Action a) { return a == Action::Fix; });
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != Letter{static_cast<int>(i + 1), false}) return false;
  }
  return true;
}

WhiteheadAuto WhiteheadAuto::inverse() const {
  if (kind_ == AutoKind::TypeII) return multiplier(multiplier_.inverted(), actions_);
  std::vector<Letter> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Letter img = images_[i];
    inv[static_cast<std::size_t>(img.generator - 1)] = {static_cast<int>(i + 1), img.inverse};
  }
  return permutation(std::move(inv));
}

std::vector<Letter> WhiteheadAuto::image(Letter l) const {
  if (l.generator < 1 || l.generator > rank_) throw InputError("letter outside the automorphism's rank");
  std::vector<Letter> out;
  if (kind_ == AutoKind::TypeI) {
    Letter img = images_[static_cast<std::size_t>(l.generator - 1)];
    out.push_back(l.inverse ? img.inverted() : img);
    return out;
  }
  const Letter y{l.generator, false};
  const Letter x = multiplier_;
  switch (actions_[static_cast<std::size_t>(l.generator - 1)]) {
    case Action::Fix: out = {y}; break;
    case Action::Left: out = {x.inverted(), y}; break;
    case Action::Right: out = {y, x}; break;
    case Action::Conjugate: out = {x.inverted(), y, x}; break;
  }
  if (l.inverse) {
    std::reverse(out.begin(), out.end());
    for (Letter& c : out) c = c.inverted();
  }
  return out;
}

std::string WhiteheadAuto::describe() const {
  std::string s;
  if (kind_ == AutoKind::TypeI) {
    s = "I(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ' ';
      s += "a" + std::to_string(i + 1) + "->" + letter_token(images_[i]);
    }
  } else {
    s = "II(x=" + letter_token(multiplier_) + ";";
    for (std::size_t i = 0; i < actions_.size(); ++i) {
      s += " a" + std::to_string(i + 1) + ":" + action_name(actions_[i]);
    }
  }
  return s + ")";
}

Word apply_auto(const WhiteheadAuto& phi, const Word& w) {
  if (phi.rank() != w.rank()) {
    throw InputError("rank mismatch: automorphism of rank " + std::to_string(phi.rank()) +
                     " applied to word of rank " + std::to_string(w.rank()));
  }
  std::vector<Letter> raw;
  raw.reserve(w.size() * 3);
  for (Letter l : w.letters()) {
    auto img = phi.image(l);
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return free_reduce(raw, w.rank());
}

Word apply_trace(std::span<const WhiteheadAuto> trace, const Word& w) {
  Word cur = w;
  for (const auto& phi : trace) cur = apply_auto(phi, cur);
  return cur;
}

std::vector<WhiteheadAuto> type_two_autos(int rank) {
  std::vector<WhiteheadAuto> out;
  const auto slots = static_cast<std::size_t>(rank);
  for (int g = 1; g <= rank; ++g) {
    for (bool inv : {false, true}) {
      const Letter x{g, inv};
      std::vector<Action> actions(slots, Action::Fix);
      // Odometer over the other rank - 1 slots, four actions each.
      while (true) {
        if (!std::all_of(actions.begin(), actions.end(), [](Action a) { return a == Action::Fix; })) {
          out.push_back(WhiteheadAuto::multiplier(x, actions));
        }
        std::size_t i = 0;
        for (; i < slots; ++i) {
          if (static_cast<int>(i + 1) == g) continue;
          if (actions[i] != Action::Conjugate) {
            actions[i] = static_cast<Action>(static_cast<int>(actions[i]) + 1);
            break;
          }
          actions[i] = Action::Fix;
        }
        if (i == slots) break;
      }
    }
  }
  return out;
}

std::vector<WhiteheadAuto> type_one_autos(int rank) {
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WhiteheadAuto> out;
  do {
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      std::vector<Letter> images;
      for (int i = 0; i < rank; ++i) images.push_back({perm[static_cast<std::size_t>(i)], ((mask >> i) & 1u) != 0});
      out.push_back(WhiteheadAuto::permutation(std::move(images)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Minimization whitehead_minimize(const Word& w, std::size_t state_cap) {
  if (w.empty()) throw InputError("whitehead_minimize needs a nonempty word");
  const auto autos = type_two_autos(w.rank());

  Minimization result{cyclic_normal_form(w), {}, 0};
  struct Parent {
    std::string prev;
    std::size_t auto_index;
    Word word;
  };

  while (result.min_word.size() > 1) {
    // Breadth-first over the equal-length plateau rooted at the current word.
    // The root is examined first, so an immediate descent costs one pass.
    const std::size_t len = result.min_word.size();
    std::unordered_map<std::string, Parent> seen;
    std::deque<std::string> queue;
    const std::string root = word_key(result.min_word);
    seen.emplace(root, Parent{std::string(), 0, result.min_word});
    queue.push_back(root);

    bool descended = false;
    while (!queue.empty() && !descended) {
      const std::string key = queue.front();
      queue.pop_front();
      const Word u = seen.at(key).word;
      for (std::size_t k = 0; k < autos.size(); ++k) {
        Word v = cyclic_normal_form(apply_auto(autos[k], u));
        if (v.size() < len) {
          std::vector<WhiteheadAuto> path{autos[k]};
          for (std::string at = key; at != root;) {
            const Parent& p = seen.at(at);
            path.push_back(autos[p.auto_index]);
            at = p.prev;
          }
          result.trace.insert(result.trace.end(), path.rbegin(), path.rend());
          result.min_word = std::move(v);
          descended = true;
          break;
        }
        if (v.size() == len) {
          std::string vk = word_key(v);
          if (seen.contains(vk)) continue;
          seen.emplace(vk, Parent{key, k, std::move(v)});
          queue.push_back(std::move(vk));
          if (seen.size() > state_cap) {
            throw SearchLimitError("Whitehead plateau exceeded " + std::to_string(state_cap) + " states");
          }
        }
      }
    }
    result.plateau_states += seen.size();
    if (!descended) break;
  }
  return result;
}

PrimitivityResult is_primitive(const Word& w, std::size_t state_cap) {
  if (w.empty()) throw InputError("is_primitive needs a nonempty word");
  Minimization m = whitehead_minimize(w, state_cap);
  PrimitivityResult r;
  r.primitive = m.min_word.size() == 1;
  r.min_word = m.min_word;
  if (r.primitive) r.certificate = std::move(m.trace);
  return r;
}

}  // namespace nsphere
