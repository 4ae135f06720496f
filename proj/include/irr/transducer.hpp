#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "irr/detail/scc.hpp"
#include "irr/words.hpp"

namespace irr {

/// One transition of a two-tape Buchi transducer: a finite (possibly empty)
/// input word and a finite (possibly empty) output word.
struct transducer_transition {
  std::string from;
  word input;
  word output;
  std::string to;

  friend bool operator==(const transducer_transition&,
                         const transducer_transition&) = default;
};

/// A Buchi transducer: states, input and output alphabets, finite-word
/// transitions, an initial state and a set of accepting states.  A pair of
/// omega-words is recognized iff some computation consumes exactly those two
/// words and visits an accepting state infinitely often.
class buchi_transducer {
 public:
  buchi_transducer(std::vector<std::string> states, alphabet input_alpha,
                   alphabet output_alpha,
                   std::vector<transducer_transition> transitions,
                   const std::string& initial,
                   const std::vector<std::string>& finals)
      : states_(std::move(states)), input_alpha_(std::move(input_alpha)),
        output_alpha_(std::move(output_alpha)),
        transitions_(std::move(transitions)) {
    if (states_.empty())
      throw std::invalid_argument("buchi_transducer: no states");
    for (int i = 0; i < static_cast<int>(states_.size()); ++i)
      if (!index_.emplace(states_[i], i).second)
        throw std::invalid_argument("buchi_transducer: duplicate state name");
    initial_ = state_index(initial);
    is_final_.assign(states_.size(), false);
    for (const auto& f : finals) is_final_[state_index(f)] = true;
    for (const auto& t : transitions_) {
      state_index(t.from);
      state_index(t.to);
      if (!input_alpha_.contains_word(t.input) ||
          !output_alpha_.contains_word(t.output))
        throw std::invalid_argument(
            "buchi_transducer: label letter outside alphabet");
    }
  }

  int state_index(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end())
      throw std::invalid_argument("buchi_transducer: unknown state " + name);
    return it->second;
  }

  const std::vector<std::string>& states() const { return states_; }
  const alphabet& input_alpha() const { return input_alpha_; }
  const alphabet& output_alpha() const { return output_alpha_; }
  const std::vector<transducer_transition>& transitions() const {
    return transitions_;
  }
  int initial() const { return initial_; }
  const std::string& initial_name() const { return states_[initial_]; }
  bool is_final(int s) const { return is_final_[s]; }
  bool is_final(const std::string& name) const {
    return is_final_[state_index(name)];
  }
  std::vector<std::string> final_names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < states_.size(); ++i)
      if (is_final_[i]) out.push_back(states_[i]);
    return out;
  }

 private:
  std::vector<std::string> states_;
  alphabet input_alpha_;
  alphabet output_alpha_;
  std::vector<transducer_transition> transitions_;
  std::map<std::string, int> index_;
  int initial_ = 0;
  std::vector<bool> is_final_;
};

/// A node of the finite acceptance graph: a control state together with one
/// normalized position per tape.
struct configuration {
  int state;
  std::size_t pos1;
  std::size_t pos2;

  friend bool operator==(const configuration&, const configuration&) = default;
};

/// A finite run: chained transitions from the initial state, the words they
/// consumed, and how often the target of a transition was accepting.
struct run_prefix {
  std::vector<transducer_transition> transitions;
  word consumed_input;
  word consumed_output;
  std::size_t final_visits = 0;
};

/// Result of validating a run prefix against a transducer and a pair of
/// finite words.
struct run_report {
  bool valid = true;
  std::size_t first_bad_index = static_cast<std::size_t>(-1);
  std::string message;
};

namespace detail {

/// The finite configuration graph of a transducer over a pair of lassos.
/// An edge applies a transition whose input word matches tape 1 at pos1 and
/// whose output word matches tape 2 at pos2; label matching may run past the
/// stem/cycle boundary, and the target positions renormalize.
struct config_graph {
  const buchi_transducer* trans = nullptr;
  lasso_word u;
  lasso_word v;
  std::vector<configuration> nodes;            // discovery (BFS) order
  std::map<std::pair<int, std::pair<std::size_t, std::size_t>>, int> ids;
  struct edge {
    int to;
    int transition;  // index into trans->transitions()
  };
  std::vector<std::vector<edge>> edges;

  config_graph(const buchi_transducer& t, const lasso_word& cu,
               const lasso_word& cv)
      : trans(&t), u(canonicalize(cu)), v(canonicalize(cv)) {
    if (t.input_alpha() != cu.alpha() || t.output_alpha() != cv.alpha())
      throw std::invalid_argument("accepts_pair: alphabet mismatch");
    const int start = id_of({t.initial(), 0, 0});
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      const int n = todo.front();
      todo.pop();
      const configuration c = nodes[n];
      const auto& ts = trans->transitions();
      for (std::size_t ti = 0; ti < ts.size(); ++ti) {
        if (trans->state_index(ts[ti].from) != c.state) continue;
        if (!matches(u, c.pos1, ts[ti].input)) continue;
        if (!matches(v, c.pos2, ts[ti].output)) continue;
        const configuration d{
            trans->state_index(ts[ti].to),
            normalize_position(u, c.pos1 + ts[ti].input.size()),
            normalize_position(v, c.pos2 + ts[ti].output.size())};
        const bool fresh =
            ids.find({d.state, {d.pos1, d.pos2}}) == ids.end();
        const int m = id_of(d);
        if (fresh) todo.push(m);
        edges[n].push_back({m, static_cast<int>(ti)});
      }
    }
  }

  static bool matches(const lasso_word& w, std::size_t pos,
                      const word& label) {
    for (std::size_t j = 0; j < label.size(); ++j)
      if (letter_of(w, pos + j) != label[j]) return false;
    return true;
  }

  int id_of(const configuration& c) {
    const auto key = std::make_pair(c.state, std::make_pair(c.pos1, c.pos2));
    const auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const int n = static_cast<int>(nodes.size());
    ids.emplace(key, n);
    nodes.push_back(c);
    edges.emplace_back();
    return n;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(nodes.size());
    for (std::size_t n = 0; n < nodes.size(); ++n)
      for (const auto& e : edges[n]) adj[n].push_back(e.to);
    return adj;
  }

  bool in_progress(const edge& e) const {
    return !trans->transitions()[e.transition].input.empty();
  }
  bool out_progress(const edge& e) const {
    return !trans->transitions()[e.transition].output.empty();
  }
};

/// Accepting components: contain a final-state configuration, an edge that
/// consumes input and an edge that produces output.  Those three features
/// can be stitched into one cycle, which pumps both tapes forever; zero
/// progress cycles alone never accept.
struct scc_accept {
  scc_result scc;
  std::vector<char> accepting;  // per component
};

inline scc_accept analyze(const config_graph& g) {
  scc_accept res;
  res.scc = strongly_connected_components(g.adjacency());
  std::vector<char> has_final(res.scc.count, 0), has_in(res.scc.count, 0),
      has_out(res.scc.count, 0);
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const int c = res.scc.comp[n];
    if (g.trans->is_final(g.nodes[n].state)) has_final[c] = 1;
    for (const auto& e : g.edges[n]) {
      if (res.scc.comp[e.to] != c) continue;
      if (g.in_progress(e)) has_in[c] = 1;
      if (g.out_progress(e)) has_out[c] = 1;
    }
  }
  res.accepting.assign(res.scc.count, 0);
  for (int c = 0; c < res.scc.count; ++c)
    res.accepting[c] = has_final[c] && has_in[c] && has_out[c];
  return res;
}

}  // namespace detail

/// Decides whether the transducer recognizes the pair of ultimately periodic
/// words.  Non-canonical lassos are canonicalized internally.
inline bool accepts_pair(const buchi_transducer& t, const lasso_word& u,
                         const lasso_word& v) {
  const detail::config_graph g(t, u, v);
  const detail::scc_accept a = detail::analyze(g);
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (a.accepting[a.scc.comp[n]]) return true;
  return false;
}

/// Witness for an accepted pair: the accepting component and a validated run
/// of at least the requested number of transitions.
struct acceptance_witness {
  bool accepted = false;
  std::vector<configuration> scc;
  run_prefix run;
};

/// Extracts a run witnessing acceptance: a path to the accepting component,
/// then a cycle through a final configuration, an input-consuming edge and
/// an output-producing edge, repeated until the requested length is reached.
inline acceptance_witness find_accepting_run(const buchi_transducer& t,
                                             const lasso_word& u,
                                             const lasso_word& v,
                                             std::size_t min_transitions) {
  const detail::config_graph g(t, u, v);
  const detail::scc_accept a = detail::analyze(g);

  acceptance_witness w;
  int comp = -1;
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (a.accepting[a.scc.comp[n]]) {
      comp = a.scc.comp[n];
      break;
    }
  if (comp < 0) return w;
  w.accepted = true;
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (a.scc.comp[n] == comp) w.scc.push_back(g.nodes[n]);

  // BFS over configuration edges, optionally restricted to the component.
  const auto bfs = [&](int from, auto goal,
                       bool inside) -> std::vector<detail::config_graph::edge> {
    std::vector<int> parent(g.nodes.size(), -1);
    std::vector<detail::config_graph::edge> via(g.nodes.size());
    std::queue<int> q;
    q.push(from);
    parent[from] = from;
    int found = goal(from) ? from : -1;
    while (found < 0 && !q.empty()) {
      const int n = q.front();
      q.pop();
      for (const auto& e : g.edges[n]) {
        if (inside && a.scc.comp[e.to] != comp) continue;
        if (parent[e.to] != -1) continue;
        parent[e.to] = n;
        via[e.to] = e;
        if (goal(e.to)) {
          found = e.to;
          break;
        }
        q.push(e.to);
      }
    }
    if (found < 0)
      throw std::logic_error("find_accepting_run: goal unreachable");
    std::vector<detail::config_graph::edge> path;
    for (int n = found; n != from; n = parent[n]) path.push_back(via[n]);
    std::reverse(path.begin(), path.end());
    return path;
  };

  const auto is_final_node = [&](int n) {
    return a.scc.comp[n] == comp && t.is_final(g.nodes[n].state);
  };

  // Anchor final configuration inside the component.
  const std::vector<detail::config_graph::edge> approach =
      bfs(0, is_final_node, false);
  int anchor = 0;
  for (const auto& e : approach) anchor = e.to;

  // One pumping cycle: anchor -> input edge -> output edge -> anchor.
  detail::config_graph::edge in_edge{}, out_edge{};
  int in_src = -1, out_src = -1;
  for (std::size_t n = 0; n < g.nodes.size() && in_src < 0; ++n) {
    if (a.scc.comp[n] != comp) continue;
    for (const auto& e : g.edges[n])
      if (a.scc.comp[e.to] == comp && g.in_progress(e)) {
        in_src = static_cast<int>(n);
        in_edge = e;
        break;
      }
  }
  for (std::size_t n = 0; n < g.nodes.size() && out_src < 0; ++n) {
    if (a.scc.comp[n] != comp) continue;
    for (const auto& e : g.edges[n])
      if (a.scc.comp[e.to] == comp && g.out_progress(e)) {
        out_src = static_cast<int>(n);
        out_edge = e;
        break;
      }
  }

  std::vector<detail::config_graph::edge> cycle = bfs(
      anchor, [&](int n) { return n == in_src; }, true);
  cycle.push_back(in_edge);
  const auto mid = bfs(
      in_edge.to, [&](int n) { return n == out_src; }, true);
  cycle.insert(cycle.end(), mid.begin(), mid.end());
  cycle.push_back(out_edge);
  const auto back = bfs(
      out_edge.to, [&](int n) { return n == anchor; }, true);
  cycle.insert(cycle.end(), back.begin(), back.end());

  std::vector<detail::config_graph::edge> all(approach);
  while (all.size() < min_transitions)
    all.insert(all.end(), cycle.begin(), cycle.end());

  for (const auto& e : all) {
    const auto& tr = t.transitions()[e.transition];
    w.run.transitions.push_back(tr);
    w.run.consumed_input += tr.input;
    w.run.consumed_output += tr.output;
    if (t.is_final(tr.to)) ++w.run.final_visits;
  }
  return w;
}

/// Disjoint union behind a fresh initial state with silent branches to both
/// operands; recognizes exactly the union of the two relations.
inline buchi_transducer union_of(const buchi_transducer& a,
                                 const buchi_transducer& b) {
  if (a.input_alpha() != b.input_alpha() ||
      a.output_alpha() != b.output_alpha())
    throw std::invalid_argument("union_of: alphabet mismatch");

  std::vector<std::string> states{"u0"};
  for (const auto& s : a.states()) states.push_back("1:" + s);
  for (const auto& s : b.states()) states.push_back("2:" + s);

  std::vector<transducer_transition> ts;
  ts.push_back({"u0", "", "", "1:" + a.initial_name()});
  ts.push_back({"u0", "", "", "2:" + b.initial_name()});
  for (const auto& t : a.transitions())
    ts.push_back({"1:" + t.from, t.input, t.output, "1:" + t.to});
  for (const auto& t : b.transitions())
    ts.push_back({"2:" + t.from, t.input, t.output, "2:" + t.to});

  std::vector<std::string> finals;
  for (const auto& f : a.final_names()) finals.push_back("1:" + f);
  for (const auto& f : b.final_names()) finals.push_back("2:" + f);

  return buchi_transducer(std::move(states), a.input_alpha(),
                          a.output_alpha(), std::move(ts), "u0", finals);
}

/// Checks a run prefix against a transducer and the two finite words it
/// claims to consume.  Violations are reported, not thrown; the report names
/// the first offending transition index.
inline run_report validate_run(const buchi_transducer& t, const run_prefix& r,
                               const word& u_prefix, const word& v_prefix) {
  run_report rep;
  const auto fail = [&](std::size_t index, std::string msg) {
    rep.valid = false;
    rep.first_bad_index = index;
    rep.message = std::move(msg);
    return rep;
  };

  word in, out;
  std::size_t visits = 0;
  for (std::size_t i = 0; i < r.transitions.size(); ++i) {
    const auto& tr = r.transitions[i];
    const bool known =
        std::find(t.transitions().begin(), t.transitions().end(), tr) !=
        t.transitions().end();
    if (!known) return fail(i, "transition not in the transducer");
    if (i == 0) {
      if (tr.from != t.initial_name())
        return fail(0, "run does not start at the initial state");
    } else if (tr.from != r.transitions[i - 1].to) {
      return fail(i, "transitions do not chain");
    }
    if (in.size() + tr.input.size() > u_prefix.size() ||
        u_prefix.compare(in.size(), tr.input.size(), tr.input) != 0)
      return fail(i, "consumed input diverges from the given prefix");
    if (out.size() + tr.output.size() > v_prefix.size() ||
        v_prefix.compare(out.size(), tr.output.size(), tr.output) != 0)
      return fail(i, "consumed output diverges from the given prefix");
    in += tr.input;
    out += tr.output;
    if (t.is_final(tr.to)) ++visits;
  }
  const std::size_t end = r.transitions.size();
  if (in != u_prefix) return fail(end, "run consumes less input than given");
  if (out != v_prefix) return fail(end, "run consumes less output than given");
  if (r.consumed_input != in)
    return fail(end, "recorded consumed_input is not the label concatenation");
  if (r.consumed_output != out)
    return fail(end,
                "recorded consumed_output is not the label concatenation");
  if (r.final_visits != visits)
    return fail(end, "recorded final_visits has the wrong count");
  return rep;
}

namespace detail {

inline std::string dot_label(const word& w) { return w.empty() ? "ε" : w; }

}  // namespace detail

/// DOT digraph; accepting states are double-circled and edges carry
/// "input/output" labels with the empty word rendered as ε.  Output order is
/// the stored state/transition order, so it is deterministic.
inline std::string to_dot(const buchi_transducer& t,
                          const std::string& name = "transducer") {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n"
     << "  __start [shape=point, label=\"\"];\n";
  for (const auto& s : t.states())
    os << "  \"" << s << "\" [shape="
       << (t.is_final(s) ? "doublecircle" : "circle") << "];\n";
  os << "  __start -> \"" << t.initial_name() << "\";\n";
  for (const auto& tr : t.transitions())
    os << "  \"" << tr.from << "\" -> \"" << tr.to << "\" [label=\""
       << detail::dot_label(tr.input) << "/" << detail::dot_label(tr.output)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace irr
