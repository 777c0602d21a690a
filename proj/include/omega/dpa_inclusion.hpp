#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "omega/acceptor.hpp"
#include "omega/product.hpp"
#include "omega/scc.hpp"
#include "omega/witness.hpp"

namespace omega {

namespace detail {

inline void require_parity(const Acceptor& p, const char* who) {
  if (p.kind() != AcceptanceKind::parity)
    throw std::invalid_argument(std::string(who) + " expects parity acceptors");
}

inline void require_same_alphabet(const Acceptor& a, const Acceptor& b) {
  if (a.automaton().alphabet() != b.automaton().alphabet())
    throw std::invalid_argument("alphabet mismatch: left {" +
                                a.automaton().alphabet().symbols() + "} right {" +
                                b.automaton().alphabet().symbols() + "}");
}

/// Core of the Colors procedure on a prebuilt reachable product: looks for a
/// nontrivial strong component of the subgraph that keeps only pairs with
/// colors >= (k1, k2), whose projected color minima are exactly (k1, k2).
inline std::optional<UPWord> colors_in_product(const Product& prod,
                                               const std::vector<int>& colors1,
                                               const std::vector<int>& colors2,
                                               int k1, int k2) {
  std::vector<char> allowed(prod.size(), 0);
  bool any = false;
  for (int s = 0; s < prod.size(); ++s) {
    allowed[s] = colors1[prod.left_of(s)] >= k1 && colors2[prod.right_of(s)] >= k2;
    any = any || allowed[s];
  }
  if (!any)
    return std::nullopt;
  for (const Scc& component : graph_sccs(prod.automaton(), allowed)) {
    if (!component.nontrivial)
      continue;
    int min1 = colors1[prod.left_of(component.states[0])];
    int min2 = colors2[prod.right_of(component.states[0])];
    for (int s : component.states) {
      min1 = std::min(min1, colors1[prod.left_of(s)]);
      min2 = std::min(min2, colors2[prod.right_of(s)]);
    }
    if (min1 == k1 && min2 == k2)
      return witness(prod.automaton(), component.states);
  }
  return std::nullopt;
}

}  // namespace detail

/// Searches for an omega word whose minimum infinitely visited color is k1 in
/// P1 and k2 in P2, returning an ultimately periodic witness if one exists.
inline std::optional<UPWord> colors(const Acceptor& p1, const Acceptor& p2,
                                    int k1, int k2) {
  detail::require_parity(p1, "colors");
  detail::require_parity(p2, "colors");
  detail::require_same_alphabet(p1, p2);
  if (k1 < 0 || k2 < 0)
    throw std::invalid_argument("colors must be nonnegative");
  Product prod = product(p1.automaton(), p2.automaton());
  return detail::colors_in_product(prod, p1.colors(), p2.colors(), k1, k2);
}

/// Parity inclusion: [[P1]] is a subset of [[P2]] iff no word has an odd
/// minimum color in P1 and an even one in P2. Queries run over the odd colors
/// present in P1 (ascending) crossed with the even colors present in P2
/// (ascending); the first hit is the witness.
inline Verdict include_dpa(const Acceptor& p1, const Acceptor& p2) {
  detail::require_parity(p1, "include_dpa");
  detail::require_parity(p2, "include_dpa");
  detail::require_same_alphabet(p1, p2);
  std::set<int> odd1, even2;
  for (int c : p1.colors())
    if (c % 2 == 1)
      odd1.insert(c);
  for (int c : p2.colors())
    if (c % 2 == 0)
      even2.insert(c);
  if (odd1.empty() || even2.empty())
    return Verdict{true, std::nullopt};
  Product prod = product(p1.automaton(), p2.automaton());
  for (int k1 : odd1)
    for (int k2 : even2)
      if (auto w = detail::colors_in_product(prod, p1.colors(), p2.colors(), k1, k2))
        return Verdict{false, std::move(w)};
  return Verdict{true, std::nullopt};
}

inline EquivVerdict equiv_dpa(const Acceptor& p1, const Acceptor& p2) {
  Verdict forward = include_dpa(p1, p2);
  if (!forward.included)
    return EquivVerdict{false, std::move(forward.witness), true};
  Verdict backward = include_dpa(p2, p1);
  if (!backward.included)
    return EquivVerdict{false, std::move(backward.witness), false};
  return EquivVerdict{true, std::nullopt, false};
}

/// Buchi/coBuchi inclusion through the two-color parity images. Mixed kinds
/// are fine, each operand converts independently.
inline Verdict include_ba_ca(const Acceptor& a1, const Acceptor& a2) {
  auto is_ba_ca = [](const Acceptor& a) {
    return a.kind() == AcceptanceKind::buchi || a.kind() == AcceptanceKind::cobuchi;
  };
  if (!is_ba_ca(a1) || !is_ba_ca(a2))
    throw std::invalid_argument("include_ba_ca expects Buchi or coBuchi acceptors");
  return include_dpa(to_dpa(a1), to_dpa(a2));
}

}  // namespace omega
