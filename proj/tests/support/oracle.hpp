#pragma once

// Exponential reference implementations used as ground truth by the test
// suites. Deliberately definition-level and guarded by hard size bounds;
// never reachable from the command line tool.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "omega/acceptor.hpp"
#include "omega/product.hpp"
#include "omega/scc.hpp"
#include "omega/witness.hpp"

namespace omega::oracle {

inline constexpr int default_bound = 12;

namespace detail {

inline void check_bound(int states, int bound) {
  if (states > bound)
    throw std::length_error("oracle bound exceeded: " + std::to_string(states) +
                            " states > " + std::to_string(bound));
}

/// Saturates the set of states reachable by a nonempty path from `seed`
/// inside `inside`, under the local adjacency masks.
inline std::uint32_t nonempty_closure(const std::vector<std::uint32_t>& adj,
                                      std::uint32_t inside, int seed) {
  std::uint32_t reach = adj[seed] & inside;
  std::uint32_t frontier = reach;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t rest = frontier; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      next |= adj[v] & inside;
    }
    frontier = next & ~reach;
    reach |= next;
  }
  return reach;
}

}  // namespace detail

/// Every omega-SCC of M: each nonempty state set that is strongly connected
/// with nonempty in-set paths between all ordered pairs (singletons need a
/// self-loop). Candidate subsets are drawn from the nontrivial maximal
/// strong components, which every strongly connected set lies inside.
/// The family comes back in canonical (size, lexicographic) order.
inline std::vector<std::vector<int>> enum_sccs_brute(const Automaton& m,
                                                     int bound = default_bound) {
  detail::check_bound(m.state_count(), bound);
  std::vector<std::vector<int>> family;
  for (const Scc& component : graph_sccs(m)) {
    if (!component.nontrivial)
      continue;
    const std::vector<int>& members = component.states;
    const int k = static_cast<int>(members.size());
    if (k > 31)
      throw std::length_error("oracle component too large to enumerate");

    std::vector<std::uint32_t> adj(k, 0), radj(k, 0);
    for (int i = 0; i < k; ++i)
      for (int s = 0; s < m.alphabet().size(); ++s) {
        int target = m.next(members[i], s);
        auto at = std::lower_bound(members.begin(), members.end(), target);
        if (at != members.end() && *at == target) {
          int j = static_cast<int>(at - members.begin());
          adj[i] |= std::uint32_t{1} << j;
          radj[j] |= std::uint32_t{1} << i;
        }
      }

    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      int seed = std::countr_zero(mask);
      if ((detail::nonempty_closure(adj, mask, seed) & mask) != mask)
        continue;
      if ((detail::nonempty_closure(radj, mask, seed) & mask) != mask)
        continue;
      std::vector<int> set;
      for (std::uint32_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        set.push_back(members[v]);
      }
      family.push_back(std::move(set));
    }
  }
  std::sort(family.begin(), family.end(), Acceptor::family_order);
  return family;
}

/// Definition-level inclusion: the Inf sets realizable from the initial pair
/// are exactly the omega-SCCs of the reachable product, so inclusion fails
/// iff some such set is accepting on the left projection and rejecting on
/// the right.
inline Verdict include_brute(const Acceptor& a1, const Acceptor& a2,
                             int bound = default_bound) {
  Product prod = product(a1.automaton(), a2.automaton());
  detail::check_bound(prod.size(), bound);
  for (const auto& component : enum_sccs_brute(prod.automaton(), bound)) {
    if (a1.accepting_inf(prod.project_left(component)) &&
        !a2.accepting_inf(prod.project_right(component)))
      return Verdict{false, witness(prod.automaton(), component)};
  }
  return Verdict{true, std::nullopt};
}

/// All ultimately periodic words with |u| <= max_u and 1 <= |v| <= max_v,
/// prefixes in length-lexicographic order and periods likewise within each
/// prefix, each pair exactly once.
inline std::vector<UPWord> enum_upwords(const Alphabet& alphabet, int max_u,
                                        int max_v) {
  if (max_u < 0 || max_v < 1)
    throw std::invalid_argument("enum_upwords needs max_u >= 0 and max_v >= 1");
  auto words_up_to = [&](int min_len, int max_len) {
    std::vector<std::string> out;
    for (int len = min_len; len <= max_len; ++len) {
      std::vector<int> digits(len, 0);
      while (true) {
        std::string word;
        for (int d : digits)
          word.push_back(alphabet.symbol(d));
        out.push_back(std::move(word));
        int pos = len - 1;
        while (pos >= 0 && digits[pos] == alphabet.size() - 1)
          digits[pos--] = 0;
        if (pos < 0)
          break;
        ++digits[pos];
      }
    }
    return out;
  };
  std::vector<UPWord> stream;
  for (const std::string& u : words_up_to(0, max_u))
    for (const std::string& v : words_up_to(1, max_v))
      stream.emplace_back(u, v);
  return stream;
}

}  // namespace omega::oracle
