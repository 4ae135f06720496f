#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace irr::detail {

/// Strongly connected components of a directed graph given as adjacency
/// lists.  Component ids are assigned in reverse topological order of the
/// condensation (a component is numbered when it is completed).
struct scc_result {
  std::vector<int> comp;  // component id per node
  int count = 0;
};

inline scc_result strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  scc_result res;
  res.comp.assign(n, -1);

  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  int next_index = 0;

  // Tarjan, iterative so deep graphs cannot overflow the call stack.
  struct frame {
    int node;
    std::size_t edge;
  };
  std::vector<frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      frame& f = call.back();
      const int v = f.node;
      if (f.edge == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (f.edge < adj[v].size()) {
        const int w = adj[v][f.edge++];
        if (index[w] == -1) {
          call.push_back({w, 0});  // invalidates f; we leave the loop now
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          res.comp[w] = res.count;
          if (w == v) break;
        }
        ++res.count;
      }
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return res;
}

}  // namespace irr::detail
