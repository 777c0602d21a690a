#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "omega/automaton.hpp"
#include "omega/scc.hpp"
#include "omega/witness.hpp"

namespace omega {

enum class AcceptanceKind { buchi, cobuchi, parity, muller };

inline const char* kind_name(AcceptanceKind kind) {
  switch (kind) {
    case AcceptanceKind::buchi: return "dba";
    case AcceptanceKind::cobuchi: return "dca";
    case AcceptanceKind::parity: return "dpa";
    case AcceptanceKind::muller: return "dma";
  }
  return "?";
}

/// A deterministic omega acceptor: a complete automaton plus one acceptance
/// condition. Acceptance of an ultimately periodic word is decided from the
/// exact Inf set of its run.
///
/// Muller families are canonicalized at construction: member sets sorted and
/// deduplicated, the family deduplicated and ordered by (size, lexicographic
/// members). An empty family is legal and denotes the empty language.
class Acceptor {
public:
  static Acceptor make_buchi(Automaton m, std::vector<int> final_set) {
    return Acceptor(std::move(m), AcceptanceKind::buchi, std::move(final_set));
  }
  static Acceptor make_cobuchi(Automaton m, std::vector<int> final_set) {
    return Acceptor(std::move(m), AcceptanceKind::cobuchi, std::move(final_set));
  }
  static Acceptor make_parity(Automaton m, std::vector<int> colors) {
    if (colors.size() != static_cast<std::size_t>(m.state_count()))
      throw std::invalid_argument("parity condition must color every state");
    for (int c : colors)
      if (c < 0)
        throw std::invalid_argument("colors must be nonnegative");
    Acceptor a(std::move(m), AcceptanceKind::parity, {});
    a.colors_ = std::move(colors);
    return a;
  }
  static Acceptor make_muller(Automaton m, std::vector<std::vector<int>> family) {
    Acceptor a(std::move(m), AcceptanceKind::muller, {});
    for (auto& set : family) {
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      for (int q : set)
        if (q < 0 || q >= a.automaton_.state_count())
          throw std::invalid_argument("final set state out of range");
    }
    std::sort(family.begin(), family.end(), family_order);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    a.family_ = std::move(family);
    return a;
  }

  AcceptanceKind kind() const noexcept { return kind_; }
  const Automaton& automaton() const noexcept { return automaton_; }

  const std::vector<int>& final_set() const {
    require_kind(kind_ == AcceptanceKind::buchi || kind_ == AcceptanceKind::cobuchi,
                 "final set");
    return final_set_;
  }
  const std::vector<int>& colors() const {
    require_kind(kind_ == AcceptanceKind::parity, "colors");
    return colors_;
  }
  const std::vector<std::vector<int>>& family() const {
    require_kind(kind_ == AcceptanceKind::muller, "final family");
    return family_;
  }

  /// Canonical family ordering: by size, then lexicographically by members.
  static bool family_order(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }

  bool accepts_from(int state, const UPWord& w) const {
    return accepting_inf(inf_set(automaton_, state, w));
  }

  bool accepts(const UPWord& w) const {
    return accepts_from(automaton_.initial(), w);
  }

  /// Decides acceptance given an Inf set (sorted). Shared with the inclusion
  /// algorithms, which test projected components directly.
  bool accepting_inf(const std::vector<int>& inf) const {
    switch (kind_) {
      case AcceptanceKind::buchi:
        return intersects(inf, final_set_);
      case AcceptanceKind::cobuchi:
        return !intersects(inf, final_set_);
      case AcceptanceKind::parity:
        return min_color_of(inf) % 2 == 1;
      case AcceptanceKind::muller:
        return family_contains(inf);
    }
    return false;
  }

  /// Minimum color over the Inf set of the run on w (parity acceptors only).
  int min_color_inf(const UPWord& w) const {
    require_kind(kind_ == AcceptanceKind::parity, "min_color_inf");
    return min_color_of(inf_set(automaton_, automaton_.initial(), w));
  }

  int min_color_of(const std::vector<int>& states) const {
    require_kind(kind_ == AcceptanceKind::parity, "min_color_of");
    int best = colors_[states.front()];
    for (int q : states)
      best = std::min(best, colors_[q]);
    return best;
  }

  bool family_contains(const std::vector<int>& set) const {
    require_kind(kind_ == AcceptanceKind::muller, "family_contains");
    return std::binary_search(family_.begin(), family_.end(), set, family_order);
  }

  friend bool operator==(const Acceptor&, const Acceptor&) = default;

private:
  Acceptor(Automaton m, AcceptanceKind kind, std::vector<int> final_set)
      : automaton_(std::move(m)), kind_(kind), final_set_(std::move(final_set)) {
    std::sort(final_set_.begin(), final_set_.end());
    final_set_.erase(std::unique(final_set_.begin(), final_set_.end()),
                     final_set_.end());
    for (int q : final_set_)
      if (q < 0 || q >= automaton_.state_count())
        throw std::invalid_argument("final state out of range");
  }

  static void require_kind(bool ok, const char* what) {
    if (!ok)
      throw std::invalid_argument(std::string(what) +
                                  " is undefined for this acceptance kind");
  }

  static bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j) ++i;
      else if (*j < *i) ++j;
      else return true;
    }
    return false;
  }

  Automaton automaton_;
  AcceptanceKind kind_;
  std::vector<int> final_set_;              // buchi / cobuchi
  std::vector<int> colors_;                 // parity, one per state
  std::vector<std::vector<int>> family_;    // muller, canonical
};

/// Inclusion verdict: either included, or a witness accepted by the left
/// operand and rejected by the right.
struct Verdict {
  bool included;
  std::optional<UPWord> witness;  // present iff !included
};

/// Equivalence verdict; when not equivalent, the witness is accepted by
/// exactly one operand and `left_accepts` records which.
struct EquivVerdict {
  bool equivalent;
  std::optional<UPWord> witness;
  bool left_accepts = false;
};

/// Swap between Buchi and coBuchi over the same structure; the two recognize
/// complementary languages.
inline Acceptor complement_ba_ca(const Acceptor& a) {
  switch (a.kind()) {
    case AcceptanceKind::buchi:
      return Acceptor::make_cobuchi(a.automaton(), a.final_set());
    case AcceptanceKind::cobuchi:
      return Acceptor::make_buchi(a.automaton(), a.final_set());
    default:
      throw std::invalid_argument("complement_ba_ca expects a Buchi or coBuchi acceptor");
  }
}

/// Language-preserving parity image: Buchi F maps to colors {F: 1, rest: 2},
/// coBuchi F to {F: 0, rest: 1}.
inline Acceptor to_dpa(const Acceptor& a) {
  bool buchi = a.kind() == AcceptanceKind::buchi;
  if (!buchi && a.kind() != AcceptanceKind::cobuchi)
    throw std::invalid_argument("to_dpa expects a Buchi or coBuchi acceptor");
  std::vector<int> colors(a.automaton().state_count(), buchi ? 2 : 1);
  for (int q : a.final_set())
    colors[q] = buchi ? 1 : 0;
  return Acceptor::make_parity(a.automaton(), std::move(colors));
}

/// Same acceptor with the initial state changed to q.
inline Acceptor rebase(const Acceptor& a, int q) {
  if (q < 0 || q >= a.automaton().state_count())
    throw std::invalid_argument("rebase state out of range");
  const Automaton& m = a.automaton();
  Automaton rebased(m.alphabet(), m.state_count(), q, m.delta());
  switch (a.kind()) {
    case AcceptanceKind::buchi:
      return Acceptor::make_buchi(std::move(rebased), a.final_set());
    case AcceptanceKind::cobuchi:
      return Acceptor::make_cobuchi(std::move(rebased), a.final_set());
    case AcceptanceKind::parity:
      return Acceptor::make_parity(std::move(rebased), a.colors());
    case AcceptanceKind::muller:
      return Acceptor::make_muller(std::move(rebased), a.family());
  }
  throw std::logic_error("unhandled acceptance kind");
}

/// Drops family members that are not SCCs of the underlying automaton; no
/// such set can ever equal an Inf set, so the language is unchanged.
inline Acceptor prune_muller(const Acceptor& u) {
  if (u.kind() != AcceptanceKind::muller)
    throw std::invalid_argument("prune_muller expects a Muller acceptor");
  std::vector<std::vector<int>> kept;
  for (const auto& set : u.family())
    if (is_omega_scc(u.automaton(), set))
      kept.push_back(set);
  return Acceptor::make_muller(u.automaton(), std::move(kept));
}

/// One single-set Muller acceptor per family member, in canonical family
/// order; the union of their languages is the original language.
inline std::vector<Acceptor> split_muller(const Acceptor& u) {
  if (u.kind() != AcceptanceKind::muller)
    throw std::invalid_argument("split_muller expects a Muller acceptor");
  std::vector<Acceptor> parts;
  parts.reserve(u.family().size());
  for (const auto& set : u.family())
    parts.push_back(Acceptor::make_muller(u.automaton(), {set}));
  return parts;
}

}  // namespace omega
