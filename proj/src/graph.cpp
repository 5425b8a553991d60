#include "omegasub/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace omegasub {

namespace {
constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
}

SccDecomposition scc_decomposition(const Digraph& graph) {
  const std::size_t n = graph.size();
  SccDecomposition result;
  result.component_of.assign(n, kUnvisited);

  // Iterative Tarjan.
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> calls;  // (node, next successor position)
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    calls.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!calls.empty()) {
      auto& [v, pos] = calls.back();
      if (pos < graph.successors[v].size()) {
        const std::size_t w = graph.successors[v][pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t node = v;
      calls.pop_back();
      if (!calls.empty()) low[calls.back().first] = std::min(low[calls.back().first], low[node]);
      if (low[node] != index[node]) continue;

      Component component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        result.component_of[w] = result.components.size();
        component.nodes.push_back(w);
      } while (w != node);
      std::sort(component.nodes.begin(), component.nodes.end());
      if (component.nodes.size() > 1) {
        component.cyclic = true;
      } else {
        const auto& succ = graph.successors[node];
        component.cyclic = std::find(succ.begin(), succ.end(), node) != succ.end();
      }
      result.components.push_back(std::move(component));
    }
  }
  return result;
}

Digraph LabeledGraph::unlabeled() const {
  Digraph g(size());
  for (std::size_t v = 0; v < size(); ++v)
    for (const auto& e : out[v]) g.add_edge(v, e.target);
  return g;
}

std::vector<bool> reachable(const LabeledGraph& graph, const std::vector<std::size_t>& sources) {
  std::vector<bool> seen(graph.size(), false);
  std::vector<std::size_t> todo;
  for (auto s : sources)
    if (!seen[s]) {
      seen[s] = true;
      todo.push_back(s);
    }
  while (!todo.empty()) {
    const auto v = todo.back();
    todo.pop_back();
    for (const auto& e : graph.out[v])
      if (!seen[e.target]) {
        seen[e.target] = true;
        todo.push_back(e.target);
      }
  }
  return seen;
}

namespace {

// BFS from the successors of `source` (or from `source` itself when
// `include_source`), stopping at the first goal node.
std::optional<std::vector<LabeledEdge>> bfs(const LabeledGraph& graph, std::size_t source, bool include_source,
                                            const std::function<bool(std::size_t)>& goal,
                                            const std::function<bool(std::size_t)>& allowed) {
  const auto ok = [&](std::size_t v) { return !allowed || allowed(v); };
  if (include_source && goal(source)) return std::vector<LabeledEdge>{};

  struct Parent {
    std::size_t node = kUnvisited;
    LabeledEdge edge{};
  };
  std::vector<Parent> parent(graph.size());
  std::vector<bool> seen(graph.size(), false);
  std::deque<std::size_t> queue{source};
  if (include_source) seen[source] = true;

  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto& e : graph.out[v]) {
      if (seen[e.target] || !ok(e.target)) continue;
      seen[e.target] = true;
      parent[e.target] = {v, e};
      if (goal(e.target)) {
        std::vector<LabeledEdge> path;
        std::size_t cur = e.target;
        while (true) {
          path.push_back(parent[cur].edge);
          const auto p = parent[cur].node;
          if (p == source) break;
          cur = p;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(e.target);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<LabeledEdge>> shortest_path(const LabeledGraph& graph, std::size_t source,
                                                      const std::function<bool(std::size_t)>& goal,
                                                      const std::function<bool(std::size_t)>& allowed) {
  return bfs(graph, source, true, goal, allowed);
}

std::optional<std::vector<LabeledEdge>> shortest_cycle(const LabeledGraph& graph, std::size_t node,
                                                       const std::function<bool(std::size_t)>& allowed) {
  return bfs(graph, node, false, [node](std::size_t v) { return v == node; }, allowed);
}

}  // namespace omegasub
