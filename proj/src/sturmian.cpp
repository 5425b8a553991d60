#include "omegasub/sturmian.hpp"

#include "omegasub/errors.hpp"

#include <algorithm>

namespace omegasub {

namespace {

void require_binary(const Alphabet& alphabet) {
  auto symbols = alphabet.symbols();
  std::sort(symbols.begin(), symbols.end());
  if (symbols != std::vector<std::string>{"0", "1"}) throw InputError("expected the binary alphabet {0, 1}");
}

Homomorphism binary_map(const Alphabet& alphabet, std::string_view zero, std::string_view one) {
  require_binary(alphabet);
  std::vector<Word> images(2);
  images[alphabet.at("0")] = alphabet.parse_word(zero);
  images[alphabet.at("1")] = alphabet.parse_word(one);
  return Homomorphism(alphabet, std::move(images));
}

}  // namespace

Alphabet binary_alphabet() { return Alphabet({"0", "1"}); }

SturmianKit sturmian_kit(const Alphabet& alphabet) {
  SturmianKit kit;
  kit.morphisms = {
      {"L0", binary_map(alphabet, "0", "01")},
      {"L1", binary_map(alphabet, "10", "1")},
      {"R0", binary_map(alphabet, "0", "10")},
      {"R1", binary_map(alphabet, "01", "1")},
  };
  kit.types = {MorphismType::type0, MorphismType::type1, MorphismType::type0, MorphismType::type1};
  return kit;
}

Homomorphism fibonacci_substitution(const Alphabet& alphabet) { return binary_map(alphabet, "01", "0"); }

BuchiAutomaton alternation_buchi() {
  enum : std::size_t { wait0, alt, wait1 };
  const SturmianKit kit = sturmian_kit();
  std::vector<std::string> names;
  for (const auto& m : kit.morphisms) names.push_back(m.name);
  BuchiAutomaton r{OmegaAutomaton(Alphabet(std::move(names)), {"wait0", "alt", "wait1"}), StateSet(3)};
  r.graph.add_initial(wait0);
  r.accepting.set(alt);
  for (Letter s = 0; s < kit.types.size(); ++s) {
    if (kit.types[s] == MorphismType::type0) {
      r.graph.add_transition(wait0, s, alt);
      r.graph.add_transition(alt, s, wait1);
      r.graph.add_transition(wait1, s, wait1);
    } else {
      r.graph.add_transition(wait0, s, wait0);
      r.graph.add_transition(alt, s, wait0);
      r.graph.add_transition(wait1, s, wait0);
    }
  }
  return r;
}

DirectiveDecision decide_sturmian(const OmegaAutomaton& automaton, std::size_t budget) {
  require_binary(automaton.alphabet());
  const SturmianKit kit = sturmian_kit(automaton.alphabet());
  const MetaAutomaton meta = build_meta(automaton, kit.morphisms, budget);
  const MetaAutomaton pruned = prune_nilpotent(meta);
  DirectiveDecision decision;
  decision.vertex_count = meta.vertex_count();
  if (!pruned.initial) return decision;

  const LabeledGraph graph = pruned.graph();
  const SccDecomposition scc = scc_decomposition(graph.unlabeled());
  const auto inner_edge = [&](std::size_t v, MorphismType type) -> std::optional<LabeledEdge> {
    for (const auto& e : graph.out[v])
      if (kit.types[e.label] == type && scc.component_of[e.target] == scc.component_of[v]) return e;
    return std::nullopt;
  };
  std::vector<bool> alternating(scc.components.size(), false);
  for (std::size_t c = 0; c < scc.components.size(); ++c) {
    bool has0 = false, has1 = false;
    for (auto v : scc.components[c].nodes) {
      has0 = has0 || inner_edge(v, MorphismType::type0).has_value();
      has1 = has1 || inner_edge(v, MorphismType::type1).has_value();
    }
    alternating[c] = has0 && has1;
  }

  auto stem = shortest_path(graph, *pruned.initial, [&](std::size_t v) { return alternating[scc.component_of[v]]; });
  if (!stem) return decision;
  const std::size_t entry = stem->empty() ? *pruned.initial : stem->back().target;
  const std::size_t component = scc.component_of[entry];
  const auto inside = [&](std::size_t v) { return scc.component_of[v] == component; };

  // entry ~> type-0 edge ~> type-1 edge ~> entry, all inside the component.
  std::vector<LabeledEdge> cycle;
  std::size_t at = entry;
  for (MorphismType type : {MorphismType::type0, MorphismType::type1}) {
    auto path = shortest_path(graph, at, [&](std::size_t v) { return inner_edge(v, type).has_value(); }, inside);
    cycle.insert(cycle.end(), path->begin(), path->end());
    const std::size_t source = path->empty() ? at : path->back().target;
    const LabeledEdge e = *inner_edge(source, type);
    cycle.push_back(e);
    at = e.target;
  }
  auto back = shortest_path(graph, at, [&](std::size_t v) { return v == entry; }, inside);
  cycle.insert(cycle.end(), back->begin(), back->end());

  DirectiveLasso lasso;
  for (const auto& e : *stem) lasso.stem.push_back(e.label);
  for (const auto& e : cycle) lasso.cycle.push_back(e.label);
  decision.answer = true;
  decision.lasso = std::move(lasso);
  return decision;
}

OmegaAutomaton coding_automaton(std::span<const Word> words, const Alphabet& alphabet) {
  require_binary(alphabet);
  if (words.empty()) throw InputError("the word set must be nonempty");
  std::vector<std::string> names{"r"};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) throw InputError("the word set must not contain the empty word");
    if (!alphabet.contains(words[i])) throw InputError("word contains a letter outside the alphabet");
    for (std::size_t j = 1; j < words[i].size(); ++j) names.push_back("w" + std::to_string(i) + "_" + std::to_string(j));
  }
  OmegaAutomaton out(alphabet, std::move(names));
  out.add_initial(0);
  std::size_t next = 1;
  for (const auto& w : words) {
    std::size_t from = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const std::size_t to = (j + 1 == w.size()) ? 0 : next++;
      out.add_transition(from, w[j], to);
      from = to;
    }
  }
  return out;
}

DirectiveDecision decide_coding(std::span<const Word> words, std::size_t budget) {
  return decide_sturmian(coding_automaton(words), budget);
}

std::optional<TotalityPath> find_total_reachable(const OmegaAutomaton& automaton,
                                                 const std::vector<NamedSubstitution>& substitutions,
                                                 std::size_t budget) {
  const MetaAutomaton meta = build_meta(automaton, substitutions, budget);
  std::vector<std::optional<bool>> total(meta.vertex_count());
  const auto is_total_vertex = [&](std::size_t v) {
    if (!total[v]) total[v] = !meta.empty[v] && is_total(meta.vertices[v]);
    return *total[v];
  };
  auto path = shortest_path(meta.graph(), 0, is_total_vertex);
  if (!path) return std::nullopt;
  TotalityPath result;
  for (const auto& e : *path) result.labels.push_back(e.label);
  result.target = path->empty() ? 0 : path->back().target;
  return result;
}

std::optional<TotalityPath> find_total_reachable(const OmegaAutomaton& automaton, std::size_t budget) {
  require_binary(automaton.alphabet());
  return find_total_reachable(automaton, sturmian_kit(automaton.alphabet()).morphisms, budget);
}

bool property_h(const OmegaAutomaton& automaton, std::size_t q) {
  require_binary(automaton.alphabet());
  if (q >= automaton.state_count()) throw InputError("state index out of range");
  const StateSet live = live_states(automaton);
  const bool on0 = automaton.relation(automaton.alphabet().at("0")).row(q).intersects(live);
  const bool on1 = automaton.relation(automaton.alphabet().at("1")).row(q).intersects(live);
  return on0 == on1;
}

std::optional<std::size_t> fibonacci_totality(const OmegaAutomaton& automaton, std::size_t budget) {
  require_binary(automaton.alphabet());
  const Orbit o = orbit(automaton, fibonacci_substitution(automaton.alphabet()), budget);
  for (std::size_t n = 0; n < o.repeat_index; ++n)
    if (is_total(o.automata[n])) return n;
  return std::nullopt;
}

}  // namespace omegasub
