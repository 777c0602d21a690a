#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omega/automaton.hpp"

namespace omega {

/// Synchronized product of two automata over the same alphabet, restricted to
/// the pairs reachable from the initial pair. Product state 0 is the initial
/// pair; the remaining pairs are numbered in breadth-first discovery order.
class Product {
public:
  Product(Automaton automaton, std::vector<std::pair<int, int>> pairs)
      : automaton_(std::move(automaton)), pairs_(std::move(pairs)) {}

  const Automaton& automaton() const noexcept { return automaton_; }
  int size() const noexcept { return automaton_.state_count(); }

  std::pair<int, int> pair_of(int state) const { return pairs_.at(state); }
  int left_of(int state) const { return pairs_.at(state).first; }
  int right_of(int state) const { return pairs_.at(state).second; }

  /// First-coordinate projection of a set of product states, sorted and
  /// duplicate-free.
  std::vector<int> project_left(const std::vector<int>& states) const {
    return project(states, true);
  }
  std::vector<int> project_right(const std::vector<int>& states) const {
    return project(states, false);
  }

private:
  std::vector<int> project(const std::vector<int>& states, bool left) const {
    std::vector<int> out;
    out.reserve(states.size());
    for (int s : states)
      out.push_back(left ? pairs_[s].first : pairs_[s].second);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Automaton automaton_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Reachable product of two automata. Throws std::invalid_argument when the
/// alphabets differ (same symbols in the same order are required).
inline Product product(const Automaton& m1, const Automaton& m2) {
  if (m1.alphabet() != m2.alphabet())
    throw std::invalid_argument("alphabet mismatch: left {" +
                                m1.alphabet().symbols() + "} right {" +
                                m2.alphabet().symbols() + "}");
  const int a = m1.alphabet().size();
  const std::uint64_t space =
      static_cast<std::uint64_t>(m1.state_count()) * m2.state_count();
  auto key = [&](int q1, int q2) {
    return static_cast<std::uint64_t>(q1) * m2.state_count() + q2;
  };
  // dense id table for products that fit, hashing only for huge state spaces
  std::vector<int> dense;
  std::unordered_map<std::uint64_t, int> sparse;
  const bool use_dense = space <= (std::uint64_t{1} << 24);
  if (use_dense)
    dense.assign(space, -1);
  auto lookup_or_insert = [&](int q1, int q2, int fresh) {
    if (use_dense) {
      int& slot = dense[key(q1, q2)];
      if (slot == -1)
        slot = fresh;
      return slot;
    }
    return sparse.emplace(key(q1, q2), fresh).first->second;
  };
  std::vector<std::pair<int, int>> pairs{{m1.initial(), m2.initial()}};
  lookup_or_insert(m1.initial(), m2.initial(), 0);
  std::vector<int> delta;
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    auto [q1, q2] = pairs[head];
    for (int s = 0; s < a; ++s) {
      int t1 = m1.next(q1, s);
      int t2 = m2.next(q2, s);
      int id = lookup_or_insert(t1, t2, static_cast<int>(pairs.size()));
      if (id == static_cast<int>(pairs.size()))
        pairs.emplace_back(t1, t2);
      delta.push_back(id);
    }
  }
  Automaton automaton(m1.alphabet(), static_cast<int>(pairs.size()), 0,
                      std::move(delta));
  return Product(std::move(automaton), std::move(pairs));
}

}  // namespace omega
