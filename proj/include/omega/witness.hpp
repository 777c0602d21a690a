#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega/automaton.hpp"
#include "omega/scc.hpp"

namespace omega {

namespace detail {

/// Translate a word to alphabet indices, reporting the offending position.
inline std::vector<int> symbol_indices(const Alphabet& alphabet,
                                       std::string_view word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    int s = alphabet.index_of(word[i]);
    if (s < 0)
      throw std::invalid_argument(std::string("unknown symbol '") + word[i] +
                                  "' at position " + std::to_string(i + 1));
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

/// Exact set of states visited infinitely often on the run from `start` on
/// u(v)^w.
///
/// The run is advanced in whole period blocks: the state reached after each
/// block is recorded until one repeats (at most state_count + 1 blocks), and
/// the states visited during the repeating cycle of blocks form the result.
/// The result is always an SCC of the automaton.
inline std::vector<int> inf_set(const Automaton& m, int start, const UPWord& w) {
  auto period = detail::symbol_indices(m.alphabet(), w.period);
  int q = m.run_from(start, w.prefix);

  std::vector<int> block_of(m.state_count(), -1);
  std::vector<int> block_starts;
  while (block_of[q] == -1) {
    block_of[q] = static_cast<int>(block_starts.size());
    block_starts.push_back(q);
    for (int s : period)
      q = m.next(q, s);
  }

  std::vector<char> visited(m.state_count(), 0);
  for (int t = block_of[q]; t < static_cast<int>(block_starts.size()); ++t) {
    int cur = block_starts[t];
    visited[cur] = 1;
    for (int s : period) {
      cur = m.next(cur, s);
      visited[cur] = 1;
    }
  }

  std::vector<int> result;
  for (int i = 0; i < m.state_count(); ++i)
    if (visited[i])
      result.push_back(i);
  return result;
}

/// Ultimately periodic word whose run visits exactly the SCC `scc_states`
/// infinitely often: Inf(u(v)^w) == scc_states.
///
/// The anchor is the lowest-index state q of the SCC; u is the shortest word
/// reaching q, and v chains shortest in-SCC round trips q -> q' -> q over the
/// remaining members in ascending order, so |u| <= |Q|-1 and |v| is O(|C|^2).
/// Throws std::logic_error when the given set is not a nontrivial SCC.
inline UPWord witness(const Automaton& m, const std::vector<int>& scc_states) {
  if (!is_omega_scc(m, scc_states))
    throw std::logic_error("witness requires a nontrivial strongly connected set");
  int q = scc_states.front();
  std::string u = shortest_word_to(m, q);

  if (scc_states.size() == 1) {
    for (int s = 0; s < m.alphabet().size(); ++s)
      if (m.next(q, s) == q)
        return UPWord(std::move(u), std::string(1, m.alphabet().symbol(s)));
    throw std::logic_error("singleton SCC without a self-loop");  // unreachable
  }

  std::vector<char> allowed(m.state_count(), 0);
  for (int s : scc_states)
    allowed[s] = 1;
  std::string v;
  for (std::size_t i = 1; i < scc_states.size(); ++i) {
    v += shortest_word_within(m, q, scc_states[i], allowed);
    v += shortest_word_within(m, scc_states[i], q, allowed);
  }
  return UPWord(std::move(u), std::move(v));
}

}  // namespace omega
