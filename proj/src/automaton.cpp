#include "omegasub/automaton.hpp"

#include "omegasub/errors.hpp"

#include <set>
#include <string_view>

namespace omegasub {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t q = 0; q < n; ++q) names.push_back("q" + std::to_string(q));
  return names;
}

void check_word(const OmegaAutomaton& automaton, std::span<const Letter> w) {
  if (!automaton.alphabet().contains(w)) throw InputError("word contains a letter outside the alphabet");
}

}  // namespace

OmegaAutomaton::OmegaAutomaton(Alphabet alphabet, std::size_t state_count)
    : OmegaAutomaton(std::move(alphabet), default_names(state_count)) {}

OmegaAutomaton::OmegaAutomaton(Alphabet alphabet, std::vector<std::string> state_names)
    : alphabet_(std::move(alphabet)), initial_(state_names.size()) {
  if (state_names.empty()) throw InputError("an automaton needs at least one state");
  if (alphabet_.size() == 0) throw InputError("an automaton needs a nonempty alphabet");
  std::set<std::string_view> seen;
  for (const auto& name : state_names)
    if (!seen.insert(name).second) throw InputError("duplicate state name '" + name + "'");
  relations_.assign(alphabet_.size(), BoolRelation(state_names.size()));
  names_ = std::make_shared<const std::vector<std::string>>(std::move(state_names));
}

std::optional<std::size_t> OmegaAutomaton::find_state(std::string_view name) const {
  for (std::size_t q = 0; q < names_->size(); ++q)
    if ((*names_)[q] == name) return q;
  return std::nullopt;
}

void OmegaAutomaton::set_initial(StateSet initial) {
  if (initial.size() != state_count()) throw InputError("initial set has the wrong size");
  initial_ = std::move(initial);
}

void OmegaAutomaton::set_relation(Letter a, BoolRelation relation) {
  if (relation.size() != state_count()) throw InputError("relation has the wrong size");
  relations_.at(a) = std::move(relation);
}

BoolRelation OmegaAutomaton::successor_relation() const {
  BoolRelation all(state_count());
  for (const auto& r : relations_) all |= r;
  return all;
}

std::size_t OmegaAutomaton::transition_count() const {
  std::size_t n = 0;
  for (const auto& r : relations_) n += r.count();
  return n;
}

std::uint64_t OmegaAutomaton::fingerprint() const {
  std::uint64_t h = mix_hash(alphabet_.size(), state_count());
  for (auto q = initial_.find_first(); q != StateSet::npos; q = initial_.find_next(q)) h = mix_hash(h, q);
  for (const auto& r : relations_) h = mix_hash(h, r.fingerprint());
  return h;
}

bool operator==(const OmegaAutomaton& lhs, const OmegaAutomaton& rhs) {
  return lhs.alphabet_ == rhs.alphabet_ && lhs.initial_ == rhs.initial_ && lhs.relations_ == rhs.relations_;
}

Word WordLasso::prefix(std::size_t len) const {
  Word out;
  out.reserve(len);
  for (std::size_t i = 0; i < len && i < stem.size(); ++i) out.push_back(stem[i]);
  while (out.size() < len && !cycle.empty()) out.push_back(cycle[(out.size() - stem.size()) % cycle.size()]);
  return out;
}

BoolRelation path_relation(const OmegaAutomaton& automaton, std::span<const Letter> w) {
  check_word(automaton, w);
  if (w.empty()) return BoolRelation::identity(automaton.state_count());
  BoolRelation result = automaton.relation(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) result = result * automaton.relation(w[i]);
  return result;
}

StateSet live_states(const OmegaAutomaton& automaton) {
  const BoolRelation next = automaton.successor_relation();
  StateSet live(automaton.state_count());
  live.set();
  for (bool changed = true; changed;) {
    changed = false;
    for (auto q = live.find_first(); q != StateSet::npos; q = live.find_next(q)) {
      if (!next.row(q).intersects(live)) {
        live.reset(q);
        changed = true;
      }
    }
  }
  return live;
}

bool is_empty_infinite(const OmegaAutomaton& automaton) {
  return !automaton.initial().intersects(live_states(automaton));
}

bool accepts_finite_word(const OmegaAutomaton& automaton, std::span<const Letter> w) {
  check_word(automaton, w);
  StateSet current = automaton.initial();
  for (Letter a : w) {
    if (current.none()) return false;
    current = automaton.relation(a).post(current);
  }
  return current.any();
}

bool accepts_extendable(const OmegaAutomaton& automaton, std::span<const Letter> w) {
  check_word(automaton, w);
  const StateSet live = live_states(automaton);
  StateSet current = automaton.initial() & live;
  for (Letter a : w) {
    if (current.none()) return false;
    current = automaton.relation(a).post(current) & live;
  }
  return current.any();
}

bool is_total(const OmegaAutomaton& automaton) {
  const StateSet live = live_states(automaton);
  const StateSet start = automaton.initial() & live;
  if (start.none()) return false;
  std::set<StateSet> seen{start};
  std::vector<StateSet> frontier{start};
  while (!frontier.empty()) {
    StateSet current = std::move(frontier.back());
    frontier.pop_back();
    for (Letter a = 0; a < automaton.alphabet().size(); ++a) {
      StateSet next = automaton.relation(a).post(current) & live;
      if (next.none()) return false;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return true;
}

OmegaAutomaton forget(const OmegaAutomaton& automaton) {
  OmegaAutomaton out = automaton;
  StateSet all(automaton.state_count());
  all.set();
  out.set_initial(std::move(all));
  return out;
}

OmegaAutomaton restrict_letters(const OmegaAutomaton& automaton, std::span<const Letter> letters) {
  OmegaAutomaton out = automaton;
  StateSet keep(automaton.alphabet().size());
  for (Letter a : letters) keep.set(a);
  for (Letter a = 0; a < automaton.alphabet().size(); ++a)
    if (!keep.test(a)) out.set_relation(a, BoolRelation(automaton.state_count()));
  return out;
}

OmegaAutomaton project_letters(const OmegaAutomaton& automaton, std::span<const Letter> letters) {
  std::vector<std::string> symbols;
  for (Letter a : letters) symbols.push_back(automaton.alphabet().symbol(a));
  OmegaAutomaton out(Alphabet(std::move(symbols)), automaton.state_names());
  out.set_initial(automaton.initial());
  for (std::size_t i = 0; i < letters.size(); ++i)
    out.set_relation(static_cast<Letter>(i), automaton.relation(letters[i]));
  return out;
}

std::optional<WordLasso> accepted_lasso(const OmegaAutomaton& automaton) {
  const StateSet live = live_states(automaton);
  const StateSet start = automaton.initial() & live;
  if (start.none()) return std::nullopt;
  std::vector<std::size_t> position(automaton.state_count(), StateSet::npos);
  Word letters;
  std::size_t q = start.find_first();
  while (position[q] == StateSet::npos) {
    position[q] = letters.size();
    bool moved = false;
    for (Letter a = 0; a < automaton.alphabet().size() && !moved; ++a) {
      const StateSet targets = automaton.relation(a).row(q) & live;
      if (auto t = targets.find_first(); t != StateSet::npos) {
        letters.push_back(a);
        q = t;
        moved = true;
      }
    }
  }
  const auto cut = static_cast<std::ptrdiff_t>(position[q]);
  return WordLasso{Word(letters.begin(), letters.begin() + cut), Word(letters.begin() + cut, letters.end())};
}

std::pair<std::size_t, bool> AutomatonTable::insert(OmegaAutomaton automaton) {
  if (auto found = find(automaton)) return {*found, false};
  const std::size_t id = items_.size();
  index_.emplace(automaton.fingerprint(), id);
  items_.push_back(std::move(automaton));
  return {id, true};
}

std::optional<std::size_t> AutomatonTable::find(const OmegaAutomaton& automaton) const {
  auto [lo, hi] = index_.equal_range(automaton.fingerprint());
  for (auto it = lo; it != hi; ++it)
    if (items_[it->second] == automaton) return it->second;
  return std::nullopt;
}

}  // namespace omegasub
