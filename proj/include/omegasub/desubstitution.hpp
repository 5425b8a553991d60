#pragma once

#include "omegasub/automaton.hpp"
#include "omegasub/homomorphism.hpp"

#include <cstddef>
#include <vector>

namespace omegasub {

inline constexpr std::size_t kDefaultVertexBudget = 100000;

// sigma^{-1}(A): same states and initial states, with q1 -a-> q2 iff sigma(a)
// labels a computation q1 -> q2 of A. An erased letter becomes a loop on every state.
OmegaAutomaton desubstitute(const OmegaAutomaton& automaton, const Homomorphism& sigma);

/// Iterates of desubstitution up to the first repeat:
/// automata[k] = sigma^{-k}(A) for k = 0..repeat_index, and
/// automata[cycle_start] == automata[repeat_index].
struct Orbit {
  std::vector<OmegaAutomaton> automata;
  std::size_t cycle_start = 0;
  std::size_t repeat_index = 0;
};

// Throws ResourceError when more than `budget` distinct automata are visited.
Orbit orbit(const OmegaAutomaton& automaton, const Homomorphism& sigma,
            std::size_t budget = kDefaultVertexBudget);

}  // namespace omegasub
