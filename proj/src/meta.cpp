#include "omegasub/meta.hpp"

#include "omegasub/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace omegasub {

LabeledGraph MetaAutomaton::graph() const {
  LabeledGraph g(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (std::size_t s = 0; s < edges[v].size(); ++s)
      if (edges[v][s] != kNoVertex) g.add_edge(v, s, edges[v][s]);
  return g;
}

std::optional<std::size_t> MetaAutomaton::follow(std::size_t from, std::span<const std::size_t> labels) const {
  std::size_t v = from;
  for (auto s : labels) {
    if (v >= vertices.size() || s >= substitutions.size() || edges[v][s] == kNoVertex) return std::nullopt;
    v = edges[v][s];
  }
  return v;
}

MetaAutomaton build_meta(const OmegaAutomaton& automaton, const std::vector<NamedSubstitution>& substitutions,
                         std::size_t budget) {
  for (const auto& s : substitutions) {
    if (!(s.map.alphabet() == automaton.alphabet()))
      throw InputError("substitution '" + s.name + "' is over a different alphabet");
    if (!is_nonerasing(s.map)) throw InputError("substitution '" + s.name + "' is erasing");
  }
  MetaAutomaton meta;
  meta.substitutions = substitutions;
  meta.initial = 0;

  AutomatonTable table;
  table.insert(automaton);
  if (budget == 0) throw ResourceError("meta-automaton budget is zero");
  meta.empty.push_back(is_empty_infinite(automaton));
  for (std::size_t v = 0; v < table.size(); ++v) {
    std::vector<std::size_t> out;
    out.reserve(substitutions.size());
    for (const auto& s : substitutions) {
      auto [id, inserted] = table.insert(desubstitute(table[v], s.map));
      if (inserted) {
        if (table.size() > budget)
          throw ResourceError("meta-automaton exceeded the budget of " + std::to_string(budget) + " vertices");
        meta.empty.push_back(is_empty_infinite(table[id]));
      }
      out.push_back(id);
    }
    meta.edges.push_back(std::move(out));
  }
  meta.vertices = std::move(table).release();
  return meta;
}

MetaAutomaton prune_nilpotent(const MetaAutomaton& meta) {
  MetaAutomaton pruned;
  pruned.substitutions = meta.substitutions;
  std::vector<std::size_t> renumber(meta.vertex_count(), kNoVertex);
  for (std::size_t v = 0; v < meta.vertex_count(); ++v) {
    if (meta.empty[v]) continue;
    renumber[v] = pruned.vertices.size();
    pruned.vertices.push_back(meta.vertices[v]);
    pruned.empty.push_back(false);
  }
  for (std::size_t v = 0; v < meta.vertex_count(); ++v) {
    if (meta.empty[v]) continue;
    std::vector<std::size_t> out;
    for (auto t : meta.edges[v]) out.push_back(t == kNoVertex ? kNoVertex : renumber[t]);
    pruned.edges.push_back(std::move(out));
  }
  if (meta.initial && !meta.empty[*meta.initial]) pruned.initial = renumber[*meta.initial];
  return pruned;
}

namespace {

std::vector<std::size_t> labels_of(const std::vector<LabeledEdge>& path) {
  std::vector<std::size_t> labels;
  for (const auto& e : path) labels.push_back(e.label);
  return labels;
}

// Lasso from one of `initials` whose cycle passes a node with `accepting` set.
std::optional<DirectiveLasso> buchi_lasso(const LabeledGraph& graph, const std::vector<std::size_t>& initials,
                                          const std::vector<bool>& accepting) {
  const SccDecomposition scc = scc_decomposition(graph.unlabeled());
  const auto good = [&](std::size_t v) { return accepting[v] && scc.components[scc.component_of[v]].cyclic; };
  for (auto init : initials) {
    auto stem = shortest_path(graph, init, good);
    if (!stem) continue;
    const std::size_t anchor = stem->empty() ? init : stem->back().target;
    const std::size_t component = scc.component_of[anchor];
    auto cycle = shortest_cycle(graph, anchor, [&](std::size_t v) { return scc.component_of[v] == component; });
    return DirectiveLasso{labels_of(*stem), labels_of(*cycle)};
  }
  return std::nullopt;
}

LabeledGraph graph_of(const OmegaAutomaton& automaton) {
  LabeledGraph g(automaton.state_count());
  for (std::size_t q = 0; q < automaton.state_count(); ++q)
    for (Letter a = 0; a < automaton.alphabet().size(); ++a) {
      const StateSet& row = automaton.relation(a).row(q);
      for (auto t = row.find_first(); t != StateSet::npos; t = row.find_next(t)) g.add_edge(q, a, t);
    }
  return g;
}

std::vector<std::size_t> members(const StateSet& set) {
  std::vector<std::size_t> out;
  for (auto q = set.find_first(); q != StateSet::npos; q = set.find_next(q)) out.push_back(q);
  return out;
}

}  // namespace

std::optional<DirectiveLasso> infinite_walk(const MetaAutomaton& pruned) {
  if (!pruned.initial) return std::nullopt;
  return buchi_lasso(pruned.graph(), {*pruned.initial}, std::vector<bool>(pruned.vertex_count(), true));
}

DirectiveDecision decide_inf_desub(const OmegaAutomaton& automaton, const std::vector<NamedSubstitution>& substitutions,
                                   std::size_t budget) {
  const MetaAutomaton meta = build_meta(automaton, substitutions, budget);
  DirectiveDecision decision;
  decision.vertex_count = meta.vertex_count();
  decision.lasso = infinite_walk(prune_nilpotent(meta));
  decision.answer = decision.lasso.has_value();
  return decision;
}

OmegaAutomaton directive_language(const OmegaAutomaton& automaton, const std::vector<NamedSubstitution>& substitutions,
                                  std::size_t budget) {
  const MetaAutomaton pruned = prune_nilpotent(build_meta(automaton, substitutions, budget));
  std::vector<std::string> names;
  for (const auto& s : substitutions) names.push_back(s.name);
  Alphabet alphabet(std::move(names));
  if (pruned.vertex_count() == 0) return OmegaAutomaton(alphabet, std::vector<std::string>{"none"});

  std::vector<std::string> states;
  for (std::size_t v = 0; v < pruned.vertex_count(); ++v) states.push_back("v" + std::to_string(v));
  OmegaAutomaton out(alphabet, std::move(states));
  if (pruned.initial) out.add_initial(*pruned.initial);
  for (std::size_t v = 0; v < pruned.vertex_count(); ++v)
    for (std::size_t s = 0; s < substitutions.size(); ++s)
      if (pruned.edges[v][s] != kNoVertex) out.add_transition(v, static_cast<Letter>(s), pruned.edges[v][s]);
  return out;
}

bool buchi_is_empty(const BuchiAutomaton& automaton) { return !buchi_accepted_lasso(automaton); }

std::optional<WordLasso> buchi_accepted_lasso(const BuchiAutomaton& automaton) {
  const std::size_t n = automaton.graph.state_count();
  std::vector<bool> accepting(n);
  for (std::size_t q = 0; q < n; ++q) accepting[q] = automaton.accepting.test(q);
  auto lasso = buchi_lasso(graph_of(automaton.graph), members(automaton.graph.initial()), accepting);
  if (!lasso) return std::nullopt;
  WordLasso word;
  for (auto s : lasso->stem) word.stem.push_back(static_cast<Letter>(s));
  for (auto s : lasso->cycle) word.cycle.push_back(static_cast<Letter>(s));
  return word;
}

DirectiveDecision decide_constrained(const OmegaAutomaton& automaton,
                                     const std::vector<NamedSubstitution>& substitutions,
                                     const BuchiAutomaton& constraint, std::size_t budget) {
  const Alphabet& symbols = constraint.graph.alphabet();
  if (symbols.size() != substitutions.size())
    throw InputError("constraint alphabet must be exactly the substitution names");
  std::vector<Letter> symbol_of;
  for (const auto& s : substitutions) {
    auto a = symbols.find(s.name);
    if (!a) throw InputError("constraint alphabet lacks substitution '" + s.name + "'");
    symbol_of.push_back(*a);
  }

  const MetaAutomaton meta = build_meta(automaton, substitutions, budget);
  const MetaAutomaton pruned = prune_nilpotent(meta);
  DirectiveDecision decision;
  decision.vertex_count = meta.vertex_count();
  if (!pruned.initial) return decision;

  // Product of the pruned meta-automaton with the constraint, reachable part only.
  const std::size_t rn = constraint.graph.state_count();
  std::unordered_map<std::size_t, std::size_t> id_of;
  std::vector<std::pair<std::size_t, std::size_t>> states;
  LabeledGraph product;
  std::vector<bool> accepting;
  const auto intern = [&](std::size_t v, std::size_t r) {
    auto [it, inserted] = id_of.try_emplace(v * rn + r, states.size());
    if (inserted) {
      states.emplace_back(v, r);
      product.out.emplace_back();
      accepting.push_back(constraint.accepting.test(r));
    }
    return it->second;
  };
  std::vector<std::size_t> initials;
  for (auto r : members(constraint.graph.initial())) initials.push_back(intern(*pruned.initial, r));
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto [v, r] = states[i];
    for (std::size_t s = 0; s < substitutions.size(); ++s) {
      const std::size_t w = pruned.edges[v][s];
      if (w == kNoVertex) continue;
      const StateSet& row = constraint.graph.relation(symbol_of[s]).row(r);
      for (auto r2 = row.find_first(); r2 != StateSet::npos; r2 = row.find_next(r2)) {
        const std::size_t target = intern(w, r2);
        product.add_edge(i, s, target);
      }
    }
  }
  decision.lasso = buchi_lasso(product, initials, accepting);
  decision.answer = decision.lasso.has_value();
  return decision;
}

Word directive_witness_prefix(const OmegaAutomaton& automaton, const std::vector<NamedSubstitution>& substitutions,
                              const DirectiveLasso& lasso, std::size_t len) {
  if (lasso.cycle.empty()) throw PreconditionError("directive lasso needs a nonempty cycle");
  for (const auto& s : substitutions)
    if (!is_nonerasing(s.map)) throw PreconditionError("substitution '" + s.name + "' is erasing");

  // Depth: the stem plus enough full cycles that every step has been used at
  // least len times; after the stem the vertex repeats every cycle.
  const std::size_t depth = lasso.stem.size() + lasso.cycle.size() * std::max<std::size_t>(1, len);
  const auto labels = lasso.prefix(depth);

  OmegaAutomaton deepest = automaton;
  for (std::size_t i = 0; i < lasso.stem.size() + lasso.cycle.size(); ++i)
    deepest = desubstitute(deepest, substitutions.at(labels[i]).map);
  auto accepted = accepted_lasso(deepest);
  if (!accepted) throw PreconditionError("directive lasso reaches an automaton with empty language");

  // sigma_0 ∘ ... ∘ sigma_{depth-1} applied to an accepted word, truncated at
  // every step: a prefix of sigma(w) only depends on the same-length prefix of w.
  Word word = accepted->prefix(len);
  for (std::size_t i = depth; i-- > 0;) {
    word = substitute(substitutions[labels[i]].map, word);
    if (word.size() > len) word.resize(len);
  }
  return word;
}

}  // namespace omegasub
