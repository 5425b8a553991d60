#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace omegasub {

struct Digraph {
  std::vector<std::vector<std::size_t>> successors;

  explicit Digraph(std::size_t n = 0) : successors(n) {}
  std::size_t size() const { return successors.size(); }
  void add_edge(std::size_t from, std::size_t to) { successors[from].push_back(to); }
};

struct Component {
  std::vector<std::size_t> nodes;  // ascending
  bool cyclic = false;             // more than one node, or a self-loop
};

struct SccDecomposition {
  std::vector<Component> components;    // reverse topological order
  std::vector<std::size_t> component_of;
};

SccDecomposition scc_decomposition(const Digraph& graph);

struct LabeledEdge {
  std::size_t label;
  std::size_t target;
};

/// Edge-labelled graph. Outgoing edges are explored in stored order, which
/// makes every search below deterministic.
struct LabeledGraph {
  std::vector<std::vector<LabeledEdge>> out;

  explicit LabeledGraph(std::size_t n = 0) : out(n) {}
  std::size_t size() const { return out.size(); }
  void add_edge(std::size_t from, std::size_t label, std::size_t to) { out[from].push_back({label, to}); }
  Digraph unlabeled() const;
};

// Nodes reachable from `sources` (inclusive).
std::vector<bool> reachable(const LabeledGraph& graph, const std::vector<std::size_t>& sources);

// Shortest path (BFS) from `source` to the first node satisfying `goal`, moving
// only through nodes accepted by `allowed`. Returns the edges taken; empty when
// `source` itself is a goal.
std::optional<std::vector<LabeledEdge>> shortest_path(
    const LabeledGraph& graph, std::size_t source, const std::function<bool(std::size_t)>& goal,
    const std::function<bool(std::size_t)>& allowed = {});

// Shortest nonempty cycle through `node` using only nodes accepted by `allowed`.
std::optional<std::vector<LabeledEdge>> shortest_cycle(const LabeledGraph& graph, std::size_t node,
                                                       const std::function<bool(std::size_t)>& allowed = {});

}  // namespace omegasub
