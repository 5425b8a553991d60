#include "omegasub/desubstitution.hpp"

#include "omegasub/errors.hpp"

namespace omegasub {

OmegaAutomaton desubstitute(const OmegaAutomaton& automaton, const Homomorphism& sigma) {
  if (!(automaton.alphabet() == sigma.alphabet()))
    throw InputError("substitution and automaton have different alphabets");
  OmegaAutomaton out = automaton;
  for (Letter a = 0; a < automaton.alphabet().size(); ++a) out.set_relation(a, path_relation(automaton, sigma.image(a)));
  return out;
}

Orbit orbit(const OmegaAutomaton& automaton, const Homomorphism& sigma, std::size_t budget) {
  if (!(automaton.alphabet() == sigma.alphabet()))
    throw InputError("substitution and automaton have different alphabets");
  AutomatonTable table;
  table.insert(automaton);
  if (budget == 0) throw ResourceError("orbit budget is zero");
  OmegaAutomaton current = automaton;
  while (true) {
    OmegaAutomaton next = desubstitute(current, sigma);
    if (auto seen = table.find(next)) {
      Orbit result;
      result.cycle_start = *seen;
      result.repeat_index = table.size();
      result.automata = std::move(table).release();
      result.automata.push_back(std::move(next));
      return result;
    }
    if (table.size() >= budget)
      throw ResourceError("orbit exceeded the budget of " + std::to_string(budget) + " automata");
    table.insert(next);
    current = std::move(next);
  }
}

}  // namespace omegasub
