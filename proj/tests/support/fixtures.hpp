#pragma once

#include "omegasub/omegasub.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace omegasub;

inline Alphabet ternary() { return Alphabet({"0", "1", "2"}); }

inline Homomorphism hom(const Alphabet& alphabet, const std::vector<std::string>& images) {
  std::vector<Word> words;
  for (const auto& image : images) words.push_back(alphabet.parse_word(image.empty() ? "eps" : image));
  return Homomorphism(alphabet, std::move(words));
}

inline OmegaAutomaton build(const Alphabet& alphabet, const std::vector<std::string>& states,
                            const std::vector<std::string>& initial,
                            const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  OmegaAutomaton a(alphabet, states);
  for (const auto& q : initial) a.add_initial(*a.find_state(q));
  for (const auto& [from, letter, to] : edges) a.add_transition(*a.find_state(from), alphabet.at(letter), *a.find_state(to));
  return a;
}

// 0-loops everywhere, 1-edges a->b->c->a, initial {a}.
inline OmegaAutomaton triangle() {
  return build(ternary(), {"a", "b", "c"}, {"a"},
               {{"a", "0", "a"}, {"b", "0", "b"}, {"c", "0", "c"}, {"a", "1", "b"}, {"b", "1", "c"}, {"c", "1", "a"}});
}

inline Homomorphism sigma_swap() { return hom(ternary(), {"0", "2", "1"}); }

inline OmegaAutomaton automaton_h() {
  return build(ternary(), {"a", "b", "c"}, {"a", "b", "c"},
               {{"a", "0", "a"}, {"b", "0", "a"}, {"a", "1", "c"}, {"c", "1", "c"}, {"c", "2", "b"}, {"b", "2", "b"}});
}

inline Homomorphism sigma_h() { return hom(ternary(), {"0120", "11220011", "222000111222"}); }

inline OmegaAutomaton full1() {
  return build(binary_alphabet(), {"q"}, {"q"}, {{"q", "0", "q"}, {"q", "1", "q"}});
}

inline OmegaAutomaton loop0() { return build(binary_alphabet(), {"q"}, {"q"}, {{"q", "0", "q"}}); }

inline OmegaAutomaton no_transitions(std::size_t states = 1) {
  OmegaAutomaton a(binary_alphabet(), states);
  a.add_initial(0);
  return a;
}

// u-0->u, u-1->v, v-0->u: the image automaton of L0.
inline OmegaAutomaton l0_image() {
  return build(binary_alphabet(), {"u", "v"}, {"u"}, {{"u", "0", "u"}, {"u", "1", "v"}, {"v", "0", "u"}});
}

// Only (01)^ω.
inline OmegaAutomaton periodic01() {
  return build(binary_alphabet(), {"p", "q"}, {"p"}, {{"p", "0", "q"}, {"q", "1", "p"}});
}

inline Homomorphism sigma_fib() { return hom(binary_alphabet(), {"01", "0"}); }
inline Homomorphism tau_swap2() { return hom(binary_alphabet(), {"11", "00"}); }
inline Homomorphism swap01() { return hom(binary_alphabet(), {"1", "0"}); }

inline std::vector<NamedSubstitution> named(const std::string& name, const Homomorphism& h) { return {{name, h}}; }

inline const NamedSubstitution& kit_member(const std::string& name) {
  static const SturmianKit kit = sturmian_kit();
  for (const auto& m : kit.morphisms)
    if (m.name == name) return m;
  throw std::out_of_range(name);
}

inline Word word(const Alphabet& alphabet, const std::string& text) { return alphabet.parse_word(text.empty() ? "eps" : text); }

}  // namespace fixtures
