#include "omegasub/single.hpp"

#include "omegasub/errors.hpp"

#include <algorithm>
#include <deque>

namespace omegasub {

namespace {

void check_alphabets(const OmegaAutomaton& automaton, const Homomorphism& sigma) {
  if (!(automaton.alphabet() == sigma.alphabet()))
    throw InputError("substitution and automaton have different alphabets");
}

void require_nonerasing(const Homomorphism& sigma, const char* procedure) {
  if (!is_nonerasing(sigma))
    throw PreconditionError(std::string(procedure) +
                            " needs a nonerasing substitution; reduce it with nonerasing_reduction first");
}

struct Generator {
  Letter letter;
  std::size_t state;
};

// Pure-substitutive search for a nonerasing sigma: a right-prolongable b and an
// initial q of sigma^{-n}(A) with a b-transition into a live state.
std::optional<Generator> find_generator(const OmegaAutomaton& desubstituted, const Homomorphism& sigma) {
  const StateSet live = live_states(desubstituted);
  const StateSet& initial = desubstituted.initial();
  for (Letter b : right_prolongable_letters(sigma))
    for (auto q = initial.find_first(); q != StateSet::npos; q = initial.find_next(q))
      if (desubstituted.relation(b).row(q).intersects(live)) return Generator{b, q};
  return std::nullopt;
}

struct PureSearch {
  SingleDecision decision;
  std::size_t state = 0;  // initial state the generated word starts from
};

PureSearch pure_substitutive(const OmegaAutomaton& automaton, const Homomorphism& sigma, std::size_t budget) {
  check_alphabets(automaton, sigma);
  PureSearch result;
  SingleDecision& decision = result.decision;

  const Homomorphism* generator = &sigma;
  OmegaAutomaton projected;
  const OmegaAutomaton* target = &automaton;
  std::optional<NonerasingReduction> reduction;
  if (!is_nonerasing(sigma)) {
    if (mortal_letters(sigma).size() == sigma.alphabet().size()) {
      decision.note = "every letter is eventually erased; no infinite word is generated";
      return result;
    }
    reduction = nonerasing_reduction(sigma);
    if (!reduction)
      throw PreconditionError("unsupported: an erased letter occurs in a generated word, so the erasing "
                              "homomorphism has no word-preserving nonerasing reduction");
    generator = &reduction->substitution;
    projected = project_letters(automaton, reduction->kept);
    target = &projected;
  }

  const Orbit o = orbit(*target, *generator, budget);
  decision.cycle_start = o.cycle_start;
  decision.repeat_index = o.repeat_index;
  if (auto found = find_generator(o.automata[o.cycle_start], *generator)) {
    decision.verdict = Verdict::yes;
    const Letter letter = reduction ? reduction->kept[found->letter] : found->letter;
    decision.witness = GeneratingLetter{letter, o.cycle_start, {}};
    result.state = found->state;
  }
  return result;
}

// Length-len prefix of the word generated from b, allowing an erasing sigma
// whose reduction is supported.
Word generated_prefix(const Homomorphism& sigma, Letter b, std::size_t len) {
  if (is_nonerasing(sigma)) return generate_prefix(sigma, b, len);
  auto reduction = nonerasing_reduction(sigma);
  if (!reduction) throw PreconditionError("unsupported erasing homomorphism");
  auto it = std::find(reduction->kept.begin(), reduction->kept.end(), b);
  if (it == reduction->kept.end()) throw PreconditionError("generating letter is erased");
  Word reduced = generate_prefix(reduction->substitution, static_cast<Letter>(it - reduction->kept.begin()), len);
  for (auto& a : reduced) a = reduction->kept[a];
  return reduced;
}

}  // namespace

SingleDecision decide_fixed_point_power(const OmegaAutomaton& automaton, const Homomorphism& sigma,
                                        std::size_t budget) {
  check_alphabets(automaton, sigma);
  require_nonerasing(sigma, "decide_fixed_point_power");
  const Orbit o = orbit(automaton, sigma, budget);
  SingleDecision decision;
  decision.cycle_start = o.cycle_start;
  decision.repeat_index = o.repeat_index;
  decision.verdict = is_empty_infinite(o.automata[o.cycle_start]) ? Verdict::no : Verdict::yes;
  return decision;
}

SingleDecision decide_pure_substitutive(const OmegaAutomaton& automaton, const Homomorphism& sigma,
                                        std::size_t budget) {
  return pure_substitutive(automaton, sigma, budget).decision;
}

SingleDecision decide_fixed_point(const OmegaAutomaton& automaton, const Homomorphism& sigma, std::size_t budget) {
  check_alphabets(automaton, sigma);
  require_nonerasing(sigma, "decide_fixed_point");
  const std::vector<Letter> fixed = fixed_letters(sigma);

  // Case 1: an accepted word over the fixed letters.
  if (auto lasso = accepted_lasso(restrict_letters(automaton, fixed))) {
    SingleDecision decision;
    decision.verdict = Verdict::yes;
    decision.witness = std::move(*lasso);
    decision.note = "word over fixed letters";
    return decision;
  }

  // Case 2: p · lim sigma^k(b) with p over the fixed letters. Start from every
  // state reachable by such a p, remembering a shortest p per state.
  const std::size_t n = automaton.state_count();
  struct Parent {
    std::size_t state;
    Letter letter;
  };
  std::vector<std::optional<Parent>> parent(n);
  StateSet reached = automaton.initial();
  std::deque<std::size_t> queue;
  for (auto q = reached.find_first(); q != StateSet::npos; q = reached.find_next(q)) queue.push_back(q);
  while (!queue.empty()) {
    const auto q = queue.front();
    queue.pop_front();
    for (Letter a : fixed) {
      const StateSet& row = automaton.relation(a).row(q);
      for (auto t = row.find_first(); t != StateSet::npos; t = row.find_next(t)) {
        if (reached.test(t)) continue;
        reached.set(t);
        parent[t] = Parent{q, a};
        queue.push_back(t);
      }
    }
  }

  OmegaAutomaton widened = automaton;
  widened.set_initial(reached);
  PureSearch search = pure_substitutive(widened, sigma, budget);
  if (search.decision.answer()) {
    Word prefix;
    for (std::size_t q = search.state; parent[q]; q = parent[q]->state) prefix.push_back(parent[q]->letter);
    std::reverse(prefix.begin(), prefix.end());
    std::get<GeneratingLetter>(search.decision.witness).fixed_prefix = std::move(prefix);
    search.decision.note = "fixed-letter prefix followed by a generated word";
  }
  return search.decision;
}

SingleDecision decide_morphic(const OmegaAutomaton& automaton, const Homomorphism& sigma, const Homomorphism& tau,
                              std::size_t budget) {
  check_alphabets(automaton, tau);
  if (!is_nonerasing(tau)) {
    SingleDecision decision;
    decision.verdict = Verdict::unsupported;
    decision.note = "erasing tau may map an infinite word to a finite one; not supported";
    return decision;
  }
  return decide_pure_substitutive(desubstitute(automaton, tau), sigma, budget);
}

Word witness_prefix(const SingleDecision& decision, const Homomorphism& sigma, std::size_t len) {
  if (const auto* lasso = std::get_if<WordLasso>(&decision.witness)) return lasso->prefix(len);
  if (const auto* gen = std::get_if<GeneratingLetter>(&decision.witness)) {
    Word out = gen->fixed_prefix;
    if (out.size() < len) {
      const Word tail = generated_prefix(sigma, gen->letter, len - out.size());
      out.insert(out.end(), tail.begin(), tail.end());
    }
    out.resize(std::min(out.size(), len));
    return out;
  }
  return {};
}

Word morphic_witness_prefix(const SingleDecision& decision, const Homomorphism& sigma, const Homomorphism& tau,
                            std::size_t len) {
  Word out = substitute(tau, witness_prefix(decision, sigma, len));
  out.resize(std::min(out.size(), len));
  return out;
}

}  // namespace omegasub
