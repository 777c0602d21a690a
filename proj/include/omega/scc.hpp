#pragma once

#include <algorithm>
#include <vector>

#include "omega/automaton.hpp"

namespace omega {

/// A set of states produced by strong-component analysis.
///
/// `nontrivial` is false exactly for a singleton component without a
/// self-edge; only nontrivial components can occur as Inf sets.
struct Scc {
  std::vector<int> states;  // sorted ascending
  bool nontrivial;
};

namespace detail {

inline bool has_self_edge(const Automaton& m, int q) {
  for (int s = 0; s < m.alphabet().size(); ++s)
    if (m.next(q, s) == q)
      return true;
  return false;
}

}  // namespace detail

/// Graph-theoretic strongly connected components of G(M), restricted to the
/// subgraph induced by `allowed` when nonempty. Components partition the
/// states in scope. The emission order (Tarjan completion order, with roots
/// tried in ascending state index and edges in alphabet order) is
/// deterministic; member lists are sorted.
inline std::vector<Scc> graph_sccs(const Automaton& m,
                                   const std::vector<char>& allowed = {}) {
  const int n = m.state_count();
  const int a = m.alphabet().size();
  auto in_scope = [&](int q) { return allowed.empty() || allowed[q]; };

  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<Scc> components;
  int next_index = 0;

  struct Frame {
    int state;
    int edge;  // next symbol to explore
  };
  std::vector<Frame> call_stack;

  for (int root = 0; root < n; ++root) {
    if (!in_scope(root) || index[root] != -1)
      continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      if (frame.edge < a) {
        int target = m.next(frame.state, frame.edge++);
        if (!in_scope(target))
          continue;
        if (index[target] == -1) {
          index[target] = lowlink[target] = next_index++;
          stack.push_back(target);
          on_stack[target] = 1;
          call_stack.push_back({target, 0});
        } else if (on_stack[target]) {
          lowlink[frame.state] = std::min(lowlink[frame.state], index[target]);
        }
        continue;
      }
      int v = frame.state;
      call_stack.pop_back();
      if (!call_stack.empty())
        lowlink[call_stack.back().state] =
            std::min(lowlink[call_stack.back().state], lowlink[v]);
      if (lowlink[v] == index[v]) {
        Scc component{{}, false};
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.states.push_back(w);
        } while (w != v);
        std::sort(component.states.begin(), component.states.end());
        component.nontrivial = component.states.size() > 1 ||
                               detail::has_self_edge(m, component.states[0]);
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

/// Reusable strong-component scanner over induced subgraphs.
///
/// Equivalent to graph_sccs(m, mask) with roots in ascending order, but the
/// scratch arrays persist between runs and only the vertices that were in
/// scope are touched, so a run costs O(|subgraph|) rather than O(|Q|). Used
/// by the inclusion algorithms, which scan many small subgraphs of one
/// product.
class SccWorkspace {
public:
  explicit SccWorkspace(int state_count)
      : index_(state_count, -1), lowlink_(state_count, 0),
        on_stack_(state_count, 0), in_scope_(state_count, 0), token_(0) {}

  /// Components of the subgraph induced by `vertices` (sorted ascending,
  /// duplicate-free); emission order matches graph_sccs on the same subgraph.
  std::vector<Scc> run(const Automaton& m, const std::vector<int>& vertices) {
    ++token_;
    for (int v : vertices)
      in_scope_[v] = token_;
    const int a = m.alphabet().size();
    std::vector<Scc> components;
    int next_index = 0;
    for (int root : vertices) {
      if (index_[root] != -1)
        continue;
      frames_.push_back({root, 0});
      index_[root] = lowlink_[root] = next_index++;
      stack_.push_back(root);
      on_stack_[root] = 1;
      touched_.push_back(root);
      while (!frames_.empty()) {
        auto& [state, edge] = frames_.back();
        if (edge < a) {
          int target = m.next(state, edge++);
          if (in_scope_[target] != token_)
            continue;
          if (index_[target] == -1) {
            index_[target] = lowlink_[target] = next_index++;
            stack_.push_back(target);
            on_stack_[target] = 1;
            touched_.push_back(target);
            frames_.push_back({target, 0});
          } else if (on_stack_[target]) {
            lowlink_[state] = std::min(lowlink_[state], index_[target]);
          }
          continue;
        }
        int v = state;
        frames_.pop_back();
        if (!frames_.empty())
          lowlink_[frames_.back().state] =
              std::min(lowlink_[frames_.back().state], lowlink_[v]);
        if (lowlink_[v] == index_[v]) {
          Scc component{{}, false};
          int w;
          do {
            w = stack_.back();
            stack_.pop_back();
            on_stack_[w] = 0;
            component.states.push_back(w);
          } while (w != v);
          std::sort(component.states.begin(), component.states.end());
          component.nontrivial = component.states.size() > 1 ||
                                 detail::has_self_edge(m, component.states[0]);
          components.push_back(std::move(component));
        }
      }
    }
    for (int v : touched_)
      index_[v] = -1;
    touched_.clear();
    return components;
  }

private:
  struct Frame {
    int state;
    int edge;
  };
  std::vector<int> index_, lowlink_;
  std::vector<char> on_stack_;
  std::vector<int> in_scope_;
  std::vector<int> stack_;
  std::vector<Frame> frames_;
  std::vector<int> touched_;
  int token_;
};

/// True iff `states` (sorted, duplicate-free) is an SCC in the omega-automata
/// sense: every ordered pair is joined by a nonempty path that stays inside
/// the set. Singletons qualify only with a self-loop.
inline bool is_omega_scc(const Automaton& m, const std::vector<int>& states) {
  if (states.empty())
    return false;
  std::vector<char> allowed(m.state_count(), 0);
  for (int q : states) {
    if (q < 0 || q >= m.state_count())
      return false;
    allowed[q] = 1;
  }
  auto components = graph_sccs(m, allowed);
  return components.size() == 1 && components[0].nontrivial &&
         components[0].states == states;
}

}  // namespace omega
