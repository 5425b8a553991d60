#pragma once

#include "omegasub/automaton.hpp"
#include "omegasub/desubstitution.hpp"
#include "omegasub/homomorphism.hpp"
#include "omegasub/meta.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace omegasub {

Alphabet binary_alphabet();

enum class MorphismType { type0, type1 };

/// Elementary Sturmian morphisms, in the order L0, L1, R0, R1:
///   L0: 0->0, 1->01   L1: 0->10, 1->1   R0: 0->0, 1->10   R1: 0->01, 1->1
/// Type 0 = {L0, R0}, type 1 = {L1, R1}.
struct SturmianKit {
  std::vector<NamedSubstitution> morphisms;
  std::vector<MorphismType> types;
};

// Built over `alphabet`, which must consist of the symbols 0 and 1.
SturmianKit sturmian_kit(const Alphabet& alphabet = binary_alphabet());

// Fibonacci substitution 0->01, 1->0.
Homomorphism fibonacci_substitution(const Alphabet& alphabet = binary_alphabet());

// Three-state deterministic Büchi automaton over {L0,L1,R0,R1} accepting the
// sequences with infinitely many type-0 and infinitely many type-1 letters.
// States: wait0 (initial), alt (accepting), wait1.
//   wait0: type0 -> alt,   type1 -> wait0
//   alt:   type0 -> wait1, type1 -> wait0
//   wait1: type0 -> wait1, type1 -> wait0
// Between two visits to alt the run reads a type-1 letter and then a type-0 letter.
BuchiAutomaton alternation_buchi();

// Does A (binary alphabet) accept a Sturmian word? Searches the pruned
// meta-automaton over the Sturmian kit for a reachable SCC with inner edges of
// both types; the lasso's cycle uses both types.
DirectiveDecision decide_sturmian(const OmegaAutomaton& automaton, std::size_t budget = kDefaultVertexBudget);

// Flower automaton with L∞ = W^ω: a root (sole initial state) and one simple
// cycle through the root per word.
OmegaAutomaton coding_automaton(std::span<const Word> words, const Alphabet& alphabet = binary_alphabet());

DirectiveDecision decide_coding(std::span<const Word> words, std::size_t budget = kDefaultVertexBudget);

struct TotalityPath {
  std::vector<std::size_t> labels;  // indices into the substitution list
  std::size_t target = 0;           // meta-automaton vertex
};

// Shortest label path from A to a total vertex of its meta-automaton.
std::optional<TotalityPath> find_total_reachable(const OmegaAutomaton& automaton,
                                                 const std::vector<NamedSubstitution>& substitutions,
                                                 std::size_t budget = kDefaultVertexBudget);
// Over the Sturmian kit.
std::optional<TotalityPath> find_total_reachable(const OmegaAutomaton& automaton,
                                                 std::size_t budget = kDefaultVertexBudget);

// State q can continue on 0 into a live state iff it can continue on 1 into one.
bool property_h(const OmegaAutomaton& automaton, std::size_t q);

// Least n in [0, m) such that sigma_f^{-n}(A) is total, over the sigma_f orbit.
std::optional<std::size_t> fibonacci_totality(const OmegaAutomaton& automaton,
                                              std::size_t budget = kDefaultVertexBudget);

}  // namespace omegasub
