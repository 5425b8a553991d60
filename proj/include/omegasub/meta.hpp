#pragma once

#include "omegasub/automaton.hpp"
#include "omegasub/desubstitution.hpp"
#include "omegasub/graph.hpp"
#include "omegasub/homomorphism.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace omegasub {

inline constexpr std::size_t kNoVertex = std::numeric_limits<std::size_t>::max();

/// Meta-ω-automaton: vertices are the automata sigma^{-1}(A) for sigma in S*,
/// edges B --s--> s^{-1}(B). Built breadth-first, so vertex indices follow BFS
/// order from the initial vertex A.
///
/// After pruning, `edges[v][s]` may be kNoVertex and `initial` may be absent.
struct MetaAutomaton {
  std::vector<NamedSubstitution> substitutions;
  std::vector<OmegaAutomaton> vertices;
  std::vector<std::vector<std::size_t>> edges;  // [vertex][substitution]
  std::vector<bool> empty;                      // L∞(vertex) = ∅
  std::optional<std::size_t> initial;

  std::size_t vertex_count() const { return vertices.size(); }
  LabeledGraph graph() const;
  // Follows labels from `from`; nullopt if an edge is missing.
  std::optional<std::size_t> follow(std::size_t from, std::span<const std::size_t> labels) const;
};

// Throws InputError for an erasing substitution or alphabet mismatch, and
// ResourceError past `budget` vertices.
MetaAutomaton build_meta(const OmegaAutomaton& automaton, const std::vector<NamedSubstitution>& substitutions,
                         std::size_t budget = kDefaultVertexBudget);

// Induced sub-meta-automaton on the vertices with nonempty language.
MetaAutomaton prune_nilpotent(const MetaAutomaton& meta);

struct DirectiveDecision {
  bool answer = false;
  std::optional<DirectiveLasso> lasso;
  std::size_t vertex_count = 0;  // of the unpruned meta-automaton
};

// Does L∞(A) contain a word infinitely desubstitutable by S?
DirectiveDecision decide_inf_desub(const OmegaAutomaton& automaton, const std::vector<NamedSubstitution>& substitutions,
                                   std::size_t budget = kDefaultVertexBudget);

// Infinite walk from the initial vertex of a pruned meta-automaton, if any.
std::optional<DirectiveLasso> infinite_walk(const MetaAutomaton& pruned);

// The pruned meta-automaton as an ω-automaton over the substitution names; its
// language is the set of directive sequences of accepted infinitely
// desubstitutable words.
OmegaAutomaton directive_language(const OmegaAutomaton& automaton, const std::vector<NamedSubstitution>& substitutions,
                                  std::size_t budget = kDefaultVertexBudget);

/// Büchi automaton: accepts the words having a run from an initial state that
/// visits `accepting` infinitely often.
struct BuchiAutomaton {
  OmegaAutomaton graph;
  StateSet accepting;
};

bool buchi_is_empty(const BuchiAutomaton& automaton);

// An accepted word, as a lasso whose cycle passes an accepting state.
std::optional<WordLasso> buchi_accepted_lasso(const BuchiAutomaton& automaton);

// Does A accept a word infinitely desubstitutable along a directive sequence
// accepted by `constraint`? The constraint's alphabet must be exactly the
// substitution names (any order).
DirectiveDecision decide_constrained(const OmegaAutomaton& automaton,
                                     const std::vector<NamedSubstitution>& substitutions,
                                     const BuchiAutomaton& constraint,
                                     std::size_t budget = kDefaultVertexBudget);

// Concrete prefix (len letters) of an accepted word with the given directive
// sequence: expands an accepted word of a deep vertex through the composed
// substitutions of the directive prefix. Requires a positive lasso from a
// meta-automaton of A over `substitutions`.
Word directive_witness_prefix(const OmegaAutomaton& automaton, const std::vector<NamedSubstitution>& substitutions,
                              const DirectiveLasso& lasso, std::size_t len);

}  // namespace omegasub
