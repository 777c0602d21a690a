#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "omega/acceptor.hpp"
#include "omega/product.hpp"
#include "omega/scc.hpp"
#include "omega/witness.hpp"

namespace omega {

/// Role of a state in a cycle DBA built by scc_to_dba: the anchor copies q_i
/// of the SCC members, the waiting states r_{i,j} (in M the run sits at q_i,
/// the DBA waits for a transition into q_j), and the dead sink.
struct CycleDbaTag {
  enum class Kind { anchor, waiting, dead };
  Kind kind;
  int i = -1;
  int j = -1;

  friend bool operator==(const CycleDbaTag&, const CycleDbaTag&) = default;
};

struct SccDba {
  Acceptor dba;
  std::vector<CycleDbaTag> tags;  // one per DBA state
};

/// Builds the DBA recognizing the words that, read by M from q, stay inside
/// the SCC F and visit every member infinitely often.
///
/// Members are ordered q_0..q_{m-1} with q_0 = q and the rest ascending by
/// state index. States are numbered: anchors 0..m-1, then r_{i,j} (i != j) in
/// lexicographic (i, j) order, the dead sink last, for exactly m^2 + 1 states
/// total. The Buchi set is {q_0}; a run accepts only by driving through the
/// anchors in cyclic order forever.
inline SccDba scc_to_dba(const Automaton& m, const std::vector<int>& f, int q) {
  if (!is_omega_scc(m, f))
    throw std::invalid_argument("scc_to_dba requires F to be an SCC");
  if (!std::binary_search(f.begin(), f.end(), q))
    throw std::invalid_argument("scc_to_dba anchor must belong to F");

  const int size = static_cast<int>(f.size());
  std::vector<int> order{q};
  for (int member : f)
    if (member != q)
      order.push_back(member);
  std::vector<int> pos_in_f(m.state_count(), -1);
  for (int i = 0; i < size; ++i)
    pos_in_f[order[i]] = i;

  const int dead = size * size;
  auto waiting = [&](int i, int j) {
    return size + i * (size - 1) + (j < i ? j : j - 1);
  };

  const int alpha = m.alphabet().size();
  std::vector<int> delta(static_cast<std::size_t>(size * size + 1) * alpha, dead);
  for (int i = 0; i < size; ++i) {
    for (int s = 0; s < alpha; ++s) {
      int k = pos_in_f[m.next(order[i], s)];
      if (k == -1)
        continue;  // leaves F: dead
      int expected = (i + 1) % size;
      delta[static_cast<std::size_t>(i) * alpha + s] =
          (k == expected) ? k : waiting(k, expected);
      for (int j = 0; j < size; ++j) {
        if (j == i)
          continue;
        delta[static_cast<std::size_t>(waiting(i, j)) * alpha + s] =
            (k == j) ? k : waiting(k, j);
      }
    }
  }

  std::vector<CycleDbaTag> tags(size * size + 1,
                                CycleDbaTag{CycleDbaTag::Kind::dead});
  for (int i = 0; i < size; ++i) {
    tags[i] = CycleDbaTag{CycleDbaTag::Kind::anchor, i, -1};
    for (int j = 0; j < size; ++j)
      if (j != i)
        tags[waiting(i, j)] = CycleDbaTag{CycleDbaTag::Kind::waiting, i, j};
  }

  Automaton automaton(m.alphabet(), size * size + 1, 0, std::move(delta));
  return SccDba{Acceptor::make_buchi(std::move(automaton), {0}), std::move(tags)};
}

namespace detail {

inline void require_muller(const Acceptor& u, const char* who) {
  if (u.kind() != AcceptanceKind::muller)
    throw std::invalid_argument(std::string(who) + " expects a Muller acceptor");
}

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool sets_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return true;
  }
  return false;
}

/// A product component is a counterexample when its left projection meets the
/// Buchi set and its right projection is outside the Muller family.
inline bool refutes(const Product& prod, const std::vector<int>& component,
                    const std::vector<int>& buchi_set, const Acceptor& muller) {
  return sets_intersect(prod.project_left(component), buchi_set) &&
         !muller.family_contains(prod.project_right(component));
}

}  // namespace detail

/// Inclusion of a DBA language in a DMA language over the same alphabet.
///
/// Step one scans the nontrivial strong components of the reachable product.
/// Step two re-scans, for every surviving component C, family member F_j
/// inside pi2(C) and member state q, the subgraph of pairs with left
/// coordinate in pi1(C) and right coordinate in F_j minus {q}; a component
/// whose left projection meets F and whose right projection is outside the
/// family yields the witness. Otherwise the inclusion holds.
inline Verdict include_dba_dma(const Acceptor& b, const Acceptor& u) {
  if (b.kind() != AcceptanceKind::buchi)
    throw std::invalid_argument("include_dba_dma expects a Buchi left operand");
  detail::require_muller(u, "include_dba_dma");
  if (b.automaton().alphabet() != u.automaton().alphabet())
    throw std::invalid_argument("alphabet mismatch: left {" +
                                b.automaton().alphabet().symbols() + "} right {" +
                                u.automaton().alphabet().symbols() + "}");
  Acceptor pruned = prune_muller(u);
  const std::vector<int>& final_set = b.final_set();
  Product prod = product(b.automaton(), u.automaton());

  std::vector<Scc> components = graph_sccs(prod.automaton());
  for (const Scc& c : components)
    if (c.nontrivial && detail::refutes(prod, c.states, final_set, pruned))
      return Verdict{false, witness(prod.automaton(), c.states)};

  SccWorkspace workspace(prod.size());
  std::vector<int> subset, punctured;
  for (const Scc& c : components) {
    if (!c.nontrivial)
      continue;
    std::vector<int> left = prod.project_left(c.states);
    if (!detail::sets_intersect(left, final_set))
      continue;
    std::vector<char> in_left(b.automaton().state_count(), 0);
    for (int q1 : left)
      in_left[q1] = 1;
    std::vector<int> right = prod.project_right(c.states);
    for (const auto& fj : pruned.family()) {
      if (!detail::is_subset(fj, right))
        continue;
      subset.clear();  // pairs with left in pi1(C) and right in F_j, ascending
      for (int s = 0; s < prod.size(); ++s)
        if (in_left[prod.left_of(s)] &&
            std::binary_search(fj.begin(), fj.end(), prod.right_of(s)))
          subset.push_back(s);
      for (int hole : fj) {
        punctured.clear();
        for (int s : subset)
          if (prod.right_of(s) != hole)
            punctured.push_back(s);
        for (const Scc& d : workspace.run(prod.automaton(), punctured))
          if (d.nontrivial && detail::refutes(prod, d.states, final_set, pruned))
            return Verdict{false, witness(prod.automaton(), d.states)};
      }
    }
  }
  return Verdict{true, std::nullopt};
}

/// Inclusion of a single-final-set DMA in an arbitrary DMA: for every
/// reachable product pair (q1, q2) with q1 in F1, the cycle DBA B(M1, F1, q1)
/// must be included in U2 rebased at q2. The first failing pair yields the
/// witness u'u(v)^w, where u' is the shortest word reaching that pair.
inline Verdict include_single_dma(const Acceptor& u1, const Acceptor& u2) {
  detail::require_muller(u1, "include_single_dma");
  detail::require_muller(u2, "include_single_dma");
  if (u1.family().size() != 1)
    throw std::invalid_argument("include_single_dma expects exactly one final set");
  Acceptor u1_pruned = prune_muller(u1);
  if (u1_pruned.family().empty())
    return Verdict{true, std::nullopt};  // the single set is no SCC: empty language
  const std::vector<int>& f1 = u1_pruned.family()[0];

  Product prod = product(u1.automaton(), u2.automaton());
  std::map<int, SccDba> dba_cache;
  for (int s = 0; s < prod.size(); ++s) {
    auto [q1, q2] = prod.pair_of(s);
    if (!std::binary_search(f1.begin(), f1.end(), q1))
      continue;
    auto it = dba_cache.find(q1);
    if (it == dba_cache.end())
      it = dba_cache.emplace(q1, scc_to_dba(u1.automaton(), f1, q1)).first;
    Verdict inner = include_dba_dma(it->second.dba, rebase(u2, q2));
    if (!inner.included)
      return Verdict{false,
                     inner.witness->prepend(shortest_word_to(prod.automaton(), s))};
  }
  return Verdict{true, std::nullopt};
}

/// Inclusion for two arbitrary DMAs: prune both, split the left operand into
/// single-set acceptors in canonical family order, and require every part to
/// be included.
inline Verdict include_dma(const Acceptor& u1, const Acceptor& u2) {
  detail::require_muller(u1, "include_dma");
  detail::require_muller(u2, "include_dma");
  if (u1.automaton().alphabet() != u2.automaton().alphabet())
    throw std::invalid_argument("alphabet mismatch: left {" +
                                u1.automaton().alphabet().symbols() + "} right {" +
                                u2.automaton().alphabet().symbols() + "}");
  Acceptor u1_pruned = prune_muller(u1);
  Acceptor u2_pruned = prune_muller(u2);
  for (const Acceptor& part : split_muller(u1_pruned)) {
    Verdict v = include_single_dma(part, u2_pruned);
    if (!v.included)
      return v;
  }
  return Verdict{true, std::nullopt};
}

inline EquivVerdict equiv_dma(const Acceptor& u1, const Acceptor& u2) {
  Verdict forward = include_dma(u1, u2);
  if (!forward.included)
    return EquivVerdict{false, std::move(forward.witness), true};
  Verdict backward = include_dma(u2, u1);
  if (!backward.included)
    return EquivVerdict{false, std::move(backward.witness), false};
  return EquivVerdict{true, std::nullopt, false};
}

}  // namespace omega
