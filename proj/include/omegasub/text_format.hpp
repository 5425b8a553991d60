#pragma once

#include "omegasub/automaton.hpp"
#include "omegasub/homomorphism.hpp"
#include "omegasub/meta.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omegasub {

// Automaton files:
//   alphabet: <sym> ...
//   states: <name> ...
//   initial: <name> ...
//   <src> <sym> <dst>        (one per line)
// '#' starts a comment. Parse errors carry file, line and offending token.
OmegaAutomaton parse_automaton(std::string_view text, const std::string& source = "<input>");
std::string print_automaton(const OmegaAutomaton& automaton);

// Büchi files: the automaton format plus `accepting: <name> ...`.
BuchiAutomaton parse_buchi(std::string_view text, const std::string& source = "<input>");
std::string print_buchi(const BuchiAutomaton& automaton);

// Substitution files: optional `name: <id>` and `alphabet: ...` headers, then one
// `<letter> -> <word>` line per letter (`eps` is the empty word).
// With `context`, letters are resolved against that alphabet, which must have
// the same symbol set; otherwise the alphabet header, or the order of the
// letter lines, fixes the alphabet.
NamedSubstitution parse_substitution(std::string_view text, const std::string& source = "<input>",
                                     const std::optional<Alphabet>& context = std::nullopt);
std::string print_substitution(const NamedSubstitution& substitution);

// One word per line over `alphabet`; blank lines and comments skipped.
std::vector<Word> parse_word_set(std::string_view text, const Alphabet& alphabet,
                                 const std::string& source = "<input>");

std::string read_file(const std::string& path);

}  // namespace omegasub
