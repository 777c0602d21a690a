#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omega/acceptor.hpp"
#include "omega/dma_inclusion.hpp"
#include "omega/dpa_inclusion.hpp"

namespace omega {

struct SameClassResult {
  bool same;
  std::optional<UPWord> witness;  // accepted from exactly one of the two states
};

/// Tests whether two states of an acceptor have the same right congruence
/// class, i.e. whether the acceptor recognizes the same language from both.
inline SameClassResult same_class(const Acceptor& a, int q1, int q2) {
  int n = a.automaton().state_count();
  if (q1 < 0 || q1 >= n || q2 < 0 || q2 >= n)
    throw std::invalid_argument("same_class state out of range");
  if (q1 == q2)
    return SameClassResult{true, std::nullopt};
  EquivVerdict verdict;
  switch (a.kind()) {
    case AcceptanceKind::buchi:
    case AcceptanceKind::cobuchi:
      verdict = equiv_dpa(to_dpa(rebase(a, q1)), to_dpa(rebase(a, q2)));
      break;
    case AcceptanceKind::parity:
      verdict = equiv_dpa(rebase(a, q1), rebase(a, q2));
      break;
    case AcceptanceKind::muller:
      verdict = equiv_dma(rebase(a, q1), rebase(a, q2));
      break;
  }
  return SameClassResult{verdict.equivalent, std::move(verdict.witness)};
}

/// Right congruence automaton of [[A]] with its construction byproducts.
///
/// representatives[s] is the access word naming state s (the empty word for
/// the initial state); the words are prefix-closed along the construction.
/// distinguishers is the set D: for any two finite words that the automaton
/// separates, some d in D is accepted after exactly one of them.
struct RightConResult {
  Automaton automaton;
  std::vector<std::string> representatives;
  std::vector<UPWord> distinguishers;
};

/// Builds the right congruence automaton by breadth-first exploration.
///
/// The (state, symbol) frontier is processed in FIFO order with symbols in
/// alphabet order; candidate classes are scanned in insertion order, so the
/// representatives come out shortest-first and the result is canonical.
/// same_class answers are memoized on unordered state pairs.
inline RightConResult right_con(const Acceptor& a) {
  const Automaton& m = a.automaton();
  const int alpha = m.alphabet().size();

  std::vector<int> class_state{m.initial()};  // a representative state per class
  std::vector<std::string> reps{""};
  std::vector<std::vector<int>> rows;  // per-class transition row
  std::vector<UPWord> distinguishers;

  std::map<std::pair<int, int>, SameClassResult> memo;
  auto same = [&](int s1, int s2) -> const SameClassResult& {
    auto key = std::minmax(s1, s2);
    auto it = memo.find(key);
    if (it == memo.end())
      it = memo.emplace(key, same_class(a, s1, s2)).first;
    return it->second;
  };
  auto remember = [&](const UPWord& w) {
    if (std::find(distinguishers.begin(), distinguishers.end(), w) ==
        distinguishers.end())
      distinguishers.push_back(w);
  };

  for (std::size_t x = 0; x < class_state.size(); ++x) {
    rows.emplace_back(alpha, -1);
    for (int s = 0; s < alpha; ++s) {
      int target = m.next(class_state[x], s);
      int match = -1;
      std::vector<const UPWord*> separating;
      for (std::size_t y = 0; y < class_state.size(); ++y) {
        const SameClassResult& r = same(target, class_state[y]);
        if (r.same) {
          match = static_cast<int>(y);
          break;
        }
        separating.push_back(&*r.witness);
      }
      if (match == -1) {
        match = static_cast<int>(class_state.size());
        class_state.push_back(target);
        reps.push_back(reps[x] + m.alphabet().symbol(s));
        for (const UPWord* w : separating)
          remember(*w);
      }
      rows[x][s] = match;
    }
  }

  std::vector<int> delta;
  delta.reserve(rows.size() * alpha);
  for (const auto& row : rows)
    delta.insert(delta.end(), row.begin(), row.end());
  return RightConResult{
      Automaton(m.alphabet(), static_cast<int>(rows.size()), 0, std::move(delta)),
      std::move(reps), std::move(distinguishers)};
}

}  // namespace omega
