#pragma once

#include <array>
#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omega {

/// Ordered finite alphabet of single-character symbols.
///
/// The declaration order is significant: every search in the library expands
/// symbols in this order, which is what makes witnesses reproducible.
class Alphabet {
public:
  explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty())
      throw std::invalid_argument("alphabet must be nonempty");
    index_.fill(-1);
    for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
      unsigned char c = static_cast<unsigned char>(symbols_[i]);
      if (index_[c] != -1)
        throw std::invalid_argument(std::string("duplicate alphabet symbol '") +
                                    symbols_[i] + "'");
      index_[c] = i;
    }
  }

  int size() const noexcept { return static_cast<int>(symbols_.size()); }

  char symbol(int index) const { return symbols_.at(index); }

  /// Index of a symbol, or -1 if it is not part of the alphabet.
  int index_of(char symbol) const noexcept {
    return index_[static_cast<unsigned char>(symbol)];
  }

  const std::string& symbols() const noexcept { return symbols_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) noexcept {
    return !(a == b);
  }

private:
  std::string symbols_;
  std::array<int, 256> index_;
};

/// An ultimately periodic omega word u(v)^w: the prefix u followed by
/// infinitely many copies of the nonempty period v.
struct UPWord {
  std::string prefix;
  std::string period;

  UPWord(std::string u, std::string v)
      : prefix(std::move(u)), period(std::move(v)) {
    if (period.empty())
      throw std::invalid_argument("period of an ultimately periodic word must be nonempty");
  }

  /// u(v)^w with a finite word prepended: x . u(v)^w == (xu)(v)^w.
  UPWord prepend(std::string_view x) const {
    return UPWord(std::string(x) + prefix, period);
  }

  friend bool operator==(const UPWord&, const UPWord&) = default;
};

/// Complete deterministic transition structure over a finite alphabet.
///
/// States are dense indices 0..state_count-1. The transition table is total:
/// one target per (state, symbol) pair. Immutable after construction.
class Automaton {
public:
  Automaton(Alphabet alphabet, int state_count, int initial,
            std::vector<int> delta)
      : alphabet_(std::move(alphabet)), state_count_(state_count),
        initial_(initial), delta_(std::move(delta)) {
    if (state_count_ <= 0)
      throw std::invalid_argument("automaton needs at least one state");
    if (initial_ < 0 || initial_ >= state_count_)
      throw std::invalid_argument("initial state out of range");
    if (delta_.size() != static_cast<std::size_t>(state_count_) * alphabet_.size())
      throw std::invalid_argument("transition table must be total");
    for (int target : delta_)
      if (target < 0 || target >= state_count_)
        throw std::invalid_argument("transition target out of range");
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int state_count() const noexcept { return state_count_; }
  int initial() const noexcept { return initial_; }

  /// Successor of `state` under the symbol with the given alphabet index.
  int next(int state, int symbol_index) const {
    return delta_[static_cast<std::size_t>(state) * alphabet_.size() + symbol_index];
  }

  /// Extension of the transition function to finite words, starting at `state`.
  int run_from(int state, std::string_view word) const {
    int q = state;
    for (std::size_t i = 0; i < word.size(); ++i) {
      int s = alphabet_.index_of(word[i]);
      if (s < 0)
        throw std::invalid_argument(std::string("unknown symbol '") + word[i] +
                                    "' at position " + std::to_string(i + 1));
      q = next(q, s);
    }
    return q;
  }

  /// State reached from the initial state on `word`.
  int run(std::string_view word) const { return run_from(initial_, word); }

  /// Flat transition table, indexed by state * |alphabet| + symbol index.
  const std::vector<int>& delta() const noexcept { return delta_; }

  friend bool operator==(const Automaton& a, const Automaton& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.state_count_ == b.state_count_ &&
           a.initial_ == b.initial_ && a.delta_ == b.delta_;
  }
  friend bool operator!=(const Automaton& a, const Automaton& b) noexcept {
    return !(a == b);
  }

private:
  Alphabet alphabet_;
  int state_count_;
  int initial_;
  std::vector<int> delta_;
};

struct ReachableResult {
  Automaton automaton;
  std::vector<int> old_to_new;  // -1 for unreachable states
};

/// Restriction of an automaton to the states reachable from its initial
/// state. New indices are assigned in breadth-first discovery order with
/// symbols expanded in alphabet order, so the result is canonical.
inline ReachableResult restrict_reachable(const Automaton& m) {
  const int n = m.state_count();
  const int a = m.alphabet().size();
  std::vector<int> old_to_new(n, -1);
  std::vector<int> order;
  order.reserve(n);
  old_to_new[m.initial()] = 0;
  order.push_back(m.initial());
  for (std::size_t head = 0; head < order.size(); ++head) {
    int q = order[head];
    for (int s = 0; s < a; ++s) {
      int t = m.next(q, s);
      if (old_to_new[t] == -1) {
        old_to_new[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<int> delta(order.size() * a);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int s = 0; s < a; ++s)
      delta[i * a + s] = old_to_new[m.next(order[i], s)];
  return ReachableResult{
      Automaton(m.alphabet(), static_cast<int>(order.size()), 0, std::move(delta)),
      std::move(old_to_new)};
}

/// Shortest word leading from `from` to `to`, using only states for which
/// `allowed` is set (or all states when `allowed` is empty). Among words of
/// minimal length the lexicographically least under alphabet order is
/// returned. Throws std::logic_error when no such word exists.
inline std::string shortest_word_within(const Automaton& m, int from, int to,
                                        const std::vector<char>& allowed) {
  const int a = m.alphabet().size();
  auto ok = [&](int q) { return allowed.empty() || allowed[q]; };
  if (!ok(from) || !ok(to))
    throw std::logic_error("endpoint excluded from the search subgraph");
  if (from == to)
    return {};
  std::vector<std::pair<int, int>> parent(m.state_count(), {-1, -1});  // (prev state, symbol)
  std::deque<int> queue{from};
  std::vector<char> seen(m.state_count(), 0);
  seen[from] = 1;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int s = 0; s < a; ++s) {
      int t = m.next(q, s);
      if (!ok(t) || seen[t])
        continue;
      seen[t] = 1;
      parent[t] = {q, s};
      if (t == to) {
        std::string word;
        for (int cur = to; cur != from; cur = parent[cur].first)
          word.push_back(m.alphabet().symbol(parent[cur].second));
        return {word.rbegin(), word.rend()};
      }
      queue.push_back(t);
    }
  }
  throw std::logic_error("target state not reachable within the subgraph");
}

/// Shortest word from the initial state to `target`; length is at most
/// state_count - 1. Throws std::logic_error for unreachable targets.
inline std::string shortest_word_to(const Automaton& m, int target) {
  return shortest_word_within(m, m.initial(), target, {});
}

}  // namespace omega
