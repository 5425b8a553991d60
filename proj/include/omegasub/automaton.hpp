#pragma once

#include "omegasub/alphabet.hpp"
#include "omegasub/bool_relation.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace omegasub {

/// ω-automaton (alphabet, states, initial states, transitions) in which every
/// infinite walk from an initial state is accepting.
///
/// States are the dense indices 0..state_count()-1; names only matter for I/O.
/// Transitions are stored as one BoolRelation per letter. Equality compares
/// alphabet, state count, initial states and relations; state names are ignored.
class OmegaAutomaton {
 public:
  OmegaAutomaton() = default;
  // States named q0, q1, ...; no initial states and no transitions.
  OmegaAutomaton(Alphabet alphabet, std::size_t state_count);
  OmegaAutomaton(Alphabet alphabet, std::vector<std::string> state_names);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return initial_.size(); }
  const std::string& state_name(std::size_t q) const { return (*names_)[q]; }
  const std::vector<std::string>& state_names() const { return *names_; }
  std::optional<std::size_t> find_state(std::string_view name) const;

  const StateSet& initial() const { return initial_; }
  void set_initial(StateSet initial);
  void add_initial(std::size_t q) { initial_.set(q); }

  const BoolRelation& relation(Letter a) const { return relations_[a]; }
  void set_relation(Letter a, BoolRelation relation);
  void add_transition(std::size_t from, Letter a, std::size_t to) { relations_[a].set(from, to); }
  bool has_transition(std::size_t from, Letter a, std::size_t to) const { return relations_[a].test(from, to); }

  // Union of all letter relations.
  BoolRelation successor_relation() const;
  std::size_t transition_count() const;

  std::uint64_t fingerprint() const;

  friend bool operator==(const OmegaAutomaton& lhs, const OmegaAutomaton& rhs);

 private:
  Alphabet alphabet_;
  std::shared_ptr<const std::vector<std::string>> names_;
  StateSet initial_;
  std::vector<BoolRelation> relations_;
};

/// Ultimately periodic infinite word stem·cycle^ω (cycle nonempty).
struct WordLasso {
  Word stem;
  Word cycle;

  // Prefix of length len of stem·cycle^ω.
  Word prefix(std::size_t len) const;
};

// q --w--> q' relation; the identity for the empty word.
BoolRelation path_relation(const OmegaAutomaton& automaton, std::span<const Letter> w);

// States from which some infinite walk starts (greatest fixpoint of "has a successor in the set").
StateSet live_states(const OmegaAutomaton& automaton);

bool is_empty_infinite(const OmegaAutomaton& automaton);

// Some computation labelled w starts at an initial state.
bool accepts_finite_word(const OmegaAutomaton& automaton, std::span<const Letter> w);

// Some computation labelled w starts at an initial state and ends in a live state,
// i.e. w is a prefix of an accepted infinite word.
bool accepts_extendable(const OmegaAutomaton& automaton, std::span<const Letter> w);

// L∞ is the full shift. Prunes dead states, then checks finite-word universality
// of the pruned automaton with a subset construction.
bool is_total(const OmegaAutomaton& automaton);

// Same transitions, every state initial.
OmegaAutomaton forget(const OmegaAutomaton& automaton);

// Keeps only the transitions labelled by letters in `letters`.
OmegaAutomaton restrict_letters(const OmegaAutomaton& automaton, std::span<const Letter> letters);

// Induced automaton on a letter subset: the result's alphabet is `letters` (in that order).
OmegaAutomaton project_letters(const OmegaAutomaton& automaton, std::span<const Letter> letters);

// Some accepted infinite word, as a lasso, if L∞ is nonempty.
std::optional<WordLasso> accepted_lasso(const OmegaAutomaton& automaton);

/// Hash-consed store of automata, keyed by relation fingerprint with full
/// comparison on collision.
class AutomatonTable {
 public:
  // Returns (index, inserted).
  std::pair<std::size_t, bool> insert(OmegaAutomaton automaton);
  std::optional<std::size_t> find(const OmegaAutomaton& automaton) const;

  std::size_t size() const { return items_.size(); }
  const OmegaAutomaton& operator[](std::size_t i) const { return items_[i]; }
  std::vector<OmegaAutomaton> release() && { return std::move(items_); }

 private:
  std::vector<OmegaAutomaton> items_;
  std::unordered_multimap<std::uint64_t, std::size_t> index_;
};

}  // namespace omegasub
