#pragma once

#include <algorithm>
#include <vector>

namespace aspic::detail {

/// Tarjan's algorithm over an adjacency-list graph, iterative so deep chains
/// cannot overflow the stack. Components come out in reverse topological
/// order: for an edge u -> v in different components, v's component is
/// emitted first.
inline std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1);
  std::vector<int> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int next_index = 0;

  struct Frame {
    int node;
    std::size_t child;
  };
  std::vector<Frame> call_stack;

  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    call_stack.push_back({start, 0});
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;

    while (!call_stack.empty()) {
      Frame& f = call_stack.back();
      if (f.child < adj[f.node].size()) {
        const int succ = adj[f.node][f.child++];
        if (index[succ] == -1) {
          index[succ] = lowlink[succ] = next_index++;
          stack.push_back(succ);
          on_stack[succ] = true;
          call_stack.push_back({succ, 0});
        } else if (on_stack[succ]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[succ]);
        }
      } else {
        if (lowlink[f.node] == index[f.node]) {
          std::vector<int> scc;
          while (true) {
            const int v = stack.back();
            stack.pop_back();
            on_stack[v] = false;
            scc.push_back(v);
            if (v == f.node) break;
          }
          std::sort(scc.begin(), scc.end());
          sccs.push_back(std::move(scc));
        }
        const int done = f.node;
        call_stack.pop_back();
        if (!call_stack.empty()) {
          Frame& parent = call_stack.back();
          lowlink[parent.node] = std::min(lowlink[parent.node], lowlink[done]);
        }
      }
    }
  }
  return sccs;
}

}  // namespace aspic::detail
