#pragma once

#include "omegasub/automaton.hpp"
#include "omegasub/desubstitution.hpp"
#include "omegasub/homomorphism.hpp"

#include <cstddef>
#include <string>
#include <variant>

namespace omegasub {

enum class Verdict { no, yes, unsupported };

/// The word fixed_prefix · lim sigma^k(letter). `orbit_index` is the cycle
/// start n of the orbit in which the letter was found.
struct GeneratingLetter {
  Letter letter = 0;
  std::size_t orbit_index = 0;
  Word fixed_prefix;
};

using SingleWitness = std::variant<std::monostate, GeneratingLetter, WordLasso>;

struct SingleDecision {
  Verdict verdict = Verdict::no;
  // GeneratingLetter for purely substitutive / morphic / fixed point (second case);
  // WordLasso over fixed letters for the first fixed-point case; none for powers.
  SingleWitness witness;
  std::size_t cycle_start = 0;
  std::size_t repeat_index = 0;
  std::string note;

  bool answer() const { return verdict == Verdict::yes; }
};

// Does A accept a fixed point of sigma^k for some k >= 1? Existence only.
SingleDecision decide_fixed_point_power(const OmegaAutomaton& automaton, const Homomorphism& sigma,
                                        std::size_t budget = kDefaultVertexBudget);

// Does A accept a purely substitutive word generated by sigma? Erasing sigma is
// first reduced; an unsupported reduction raises PreconditionError.
SingleDecision decide_pure_substitutive(const OmegaAutomaton& automaton, const Homomorphism& sigma,
                                        std::size_t budget = kDefaultVertexBudget);

// Does A accept a fixed point of sigma itself?
SingleDecision decide_fixed_point(const OmegaAutomaton& automaton, const Homomorphism& sigma,
                                  std::size_t budget = kDefaultVertexBudget);

// Does A accept tau(y) for a purely substitutive y generated by sigma?
// Erasing tau yields Verdict::unsupported.
SingleDecision decide_morphic(const OmegaAutomaton& automaton, const Homomorphism& sigma,
                              const Homomorphism& tau, std::size_t budget = kDefaultVertexBudget);

// First len letters of the witness word of a positive decision.
Word witness_prefix(const SingleDecision& decision, const Homomorphism& sigma, std::size_t len);

// First len letters of tau(y), y the purely substitutive witness of decide_morphic.
Word morphic_witness_prefix(const SingleDecision& decision, const Homomorphism& sigma,
                            const Homomorphism& tau, std::size_t len);

}  // namespace omegasub
