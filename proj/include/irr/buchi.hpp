#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "irr/detail/scc.hpp"
#include "irr/words.hpp"

namespace irr {

/// A nondeterministic one-tape Buchi automaton with single-letter
/// transitions.  A lasso word is accepted iff some run visits a final state
/// infinitely often.
class buchi_automaton {
 public:
  struct transition {
    int from;
    char letter;
    int to;
  };

  buchi_automaton(std::vector<std::string> states, alphabet alpha,
                  const std::vector<std::tuple<std::string, char, std::string>>&
                      transitions,
                  const std::string& initial,
                  const std::vector<std::string>& finals)
      : states_(std::move(states)), alpha_(std::move(alpha)) {
    if (states_.empty())
      throw std::invalid_argument("buchi_automaton: no states");
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
      if (!index_.emplace(states_[i], i).second)
        throw std::invalid_argument("buchi_automaton: duplicate state name");
    }
    initial_ = state_index(initial);
    is_final_.assign(states_.size(), false);
    for (const auto& f : finals) is_final_[state_index(f)] = true;
    for (const auto& [from, letter, to] : transitions) {
      if (!alpha_.contains(letter))
        throw std::invalid_argument("buchi_automaton: letter not in alphabet");
      transitions_.push_back({state_index(from), letter, state_index(to)});
    }
  }

  int state_index(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end())
      throw std::invalid_argument("buchi_automaton: unknown state " + name);
    return it->second;
  }

  const std::vector<std::string>& states() const { return states_; }
  const alphabet& alpha() const { return alpha_; }
  const std::vector<transition>& transitions() const { return transitions_; }
  int initial() const { return initial_; }
  bool is_final(int s) const { return is_final_[s]; }

 private:
  std::vector<std::string> states_;
  alphabet alpha_;
  std::map<std::string, int> index_;
  std::vector<transition> transitions_;
  int initial_ = 0;
  std::vector<bool> is_final_;
};

/// Decides membership of an ultimately periodic word.  The product of
/// automaton states with normalized tape positions is finite; the word is
/// accepted iff a reachable strongly connected component of that product
/// contains a final-state node and at least one edge.  Every edge consumes a
/// letter, so any cycle makes progress on the tape.
inline bool accepts_lasso(const buchi_automaton& aut, const lasso_word& w) {
  if (aut.alpha() != w.alpha())
    throw std::invalid_argument("accepts_lasso: alphabet mismatch");

  const std::size_t span = position_span(w);
  const std::size_t nstates = aut.states().size();
  const auto node = [&](int s, std::size_t p) {
    return static_cast<int>(s * span + p);
  };

  std::vector<std::vector<int>> adj(nstates * span);
  for (std::size_t p = 0; p < span; ++p) {
    const char c = letter_of(w, p);
    const std::size_t q = normalize_position(w, p + 1);
    for (const auto& t : aut.transitions())
      if (t.letter == c) adj[node(t.from, p)].push_back(node(t.to, q));
  }

  // Reachability from the initial configuration.
  std::vector<char> reach(adj.size(), 0);
  std::vector<int> todo{node(aut.initial(), 0)};
  reach[todo.back()] = 1;
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    for (int u : adj[v])
      if (!reach[u]) {
        reach[u] = 1;
        todo.push_back(u);
      }
  }

  const auto scc = detail::strongly_connected_components(adj);
  std::vector<char> has_final(scc.count, 0), has_edge(scc.count, 0),
      reachable(scc.count, 0);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const int c = scc.comp[v];
    if (reach[v]) reachable[c] = 1;
    if (aut.is_final(static_cast<int>(v / span))) has_final[c] = 1;
    for (int u : adj[v])
      if (scc.comp[u] == c) has_edge[c] = 1;
  }
  for (int c = 0; c < scc.count; ++c)
    if (reachable[c] && has_final[c] && has_edge[c]) return true;
  return false;
}

/// The omega-regular language of binary words with infinitely many 1s.
inline buchi_automaton automaton_inf_ones() {
  return buchi_automaton({"q0", "q1"}, alphabet::binary(),
                         {{"q0", '0', "q0"},
                          {"q0", '1', "q1"},
                          {"q1", '1', "q1"},
                          {"q1", '0', "q0"}},
                         "q0", {"q1"});
}

/// Complement language, built by hand: finitely many 1s.  The automaton
/// guesses a point after which only 0s are read.
inline buchi_automaton automaton_fin_ones() {
  return buchi_automaton({"q0", "q1"}, alphabet::binary(),
                         {{"q0", '0', "q0"},
                          {"q0", '1', "q0"},
                          {"q0", '0', "q1"},
                          {"q1", '0', "q1"}},
                         "q0", {"q1"});
}

}  // namespace irr
