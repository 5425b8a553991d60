#pragma once

#include "omegasub/automaton.hpp"
#include "omegasub/meta.hpp"

#include <string>

namespace omegasub {

// Nodes in state order, initial states doubly circled; edges ordered by
// (source, letter, target). Output is byte-stable.
std::string to_dot(const OmegaAutomaton& automaton);

// Vertices labelled by index, empty-language vertices dashed, edges labelled
// by substitution name and ordered by (vertex, substitution).
std::string to_dot(const MetaAutomaton& meta);

// Throws InputError when the file cannot be written.
void write_file(const std::string& path, const std::string& contents);

}  // namespace omegasub
