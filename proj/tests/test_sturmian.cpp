#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/seed.hpp"

#include <doctest.h>

#include <set>

using namespace omegasub;
using namespace fixtures;

namespace {

oracle::Set accepting_of(const BuchiAutomaton& b) {
  oracle::Set acc(b.graph.state_count());
  for (std::size_t q = 0; q < acc.size(); ++q) acc[q] = b.accepting.test(q);
  return acc;
}

bool has_type(const Word& labels, MorphismType type) {
  const auto& types = sturmian_kit().types;
  return std::any_of(labels.begin(), labels.end(), [&](Letter l) { return types[l] == type; });
}

std::set<Word> concatenation_prefixes(const std::vector<Word>& words, std::size_t len) {
  std::set<Word> out;
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      if (w.size() >= len) {
        for (std::size_t k = 0; k <= len; ++k) out.insert(Word(w.begin(), w.begin() + k));
        continue;
      }
      for (const auto& piece : words) {
        Word longer = w;
        longer.insert(longer.end(), piece.begin(), piece.end());
        next.push_back(longer);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool all_h(const OmegaAutomaton& a) {
  for (std::size_t q = 0; q < a.state_count(); ++q)
    if (!property_h(a, q)) return false;
  return true;
}

}  // namespace

TEST_CASE("elementary Sturmian morphisms") {
  const auto kit = sturmian_kit();
  REQUIRE(kit.morphisms.size() == 4);
  const Alphabet b = binary_alphabet();
  CHECK(kit_member("L0").map == hom(b, {"0", "01"}));
  CHECK(kit_member("L1").map == hom(b, {"10", "1"}));
  CHECK(kit_member("R0").map == hom(b, {"0", "10"}));
  CHECK(kit_member("R1").map == hom(b, {"01", "1"}));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(kit.types[i] == (kit.morphisms[i].name[1] == '0' ? MorphismType::type0 : MorphismType::type1));
  CHECK(fibonacci_substitution() == sigma_fib());
}

TEST_CASE("alternation automaton on sample lassos") {
  const auto alt = alternation_buchi();
  const auto& ab = alt.graph.alphabet();
  const auto p = oracle::plain(alt.graph);
  const auto acc = accepting_of(alt);
  CHECK(oracle::buchi_lasso(p, acc, Word{}, ab.parse_word("L0.L1")));
  CHECK_FALSE(oracle::buchi_lasso(p, acc, ab.parse_word("L0.L1.L0"), ab.parse_word("R0")));
  CHECK(oracle::buchi_lasso(p, acc, Word{}, ab.parse_word("R0.R1.R1")));
}

TEST_CASE("property: alternation automaton accepts exactly the type-alternating lassos") {
  const auto alt = alternation_buchi();
  const auto p = oracle::plain(alt.graph);
  const auto acc = accepting_of(alt);
  for (std::size_t ul = 0; ul <= 3; ++ul)
    oracle::for_each_word(4, ul, [&](const Word& u) {
      for (std::size_t vl = 1; vl <= 3; ++vl)
        oracle::for_each_word(4, vl, [&](const Word& v) {
          const bool both = has_type(v, MorphismType::type0) && has_type(v, MorphismType::type1);
          CHECK(oracle::buchi_lasso(p, acc, u, v) == both);
        });
    });
}

TEST_CASE("Sturmian decision examples") {
  CHECK(decide_sturmian(full1()).answer);
  CHECK_FALSE(decide_sturmian(loop0()).answer);
  const auto d = decide_sturmian(l0_image());
  CHECK(d.answer);
  CHECK(decide_constrained(l0_image(), sturmian_kit().morphisms, alternation_buchi()).answer);
  CHECK_THROWS_AS(decide_sturmian(triangle()), InputError);
}

TEST_CASE("periodic-only automata contain no Sturmian word") {
  CHECK_FALSE(decide_sturmian(periodic01()).answer);
  CHECK_FALSE(decide_sturmian(no_transitions()).answer);
  CHECK_FALSE(decide_sturmian(fixtures::build(binary_alphabet(), {"a", "b", "c"}, {"a"},
                                              {{"a", "1", "b"}, {"b", "0", "c"}, {"c", "0", "b"}}))
                  .answer);
}

TEST_CASE("property: automata with a single infinite word are never Sturmian") {
  // Exactly one outgoing edge per state: the language is one eventually periodic word.
  std::mt19937_64 rng(gen::base_seed() + 61);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 6;
    OmegaAutomaton a(binary_alphabet(), n);
    a.add_initial(0);
    for (std::size_t q = 0; q < n; ++q) a.add_transition(q, rng() % 2, rng() % n);
    CHECK_FALSE(decide_sturmian(a).answer);
  }
}

TEST_CASE("flower automata") {
  const Alphabet b = binary_alphabet();
  std::vector<Word> w0{Word{0}};
  auto f = coding_automaton(w0);
  CHECK(f.state_count() == 1);
  CHECK(f.transition_count() == 1);
  CHECK(f.has_transition(0, 0, 0));

  std::vector<Word> w1{Word{0}, word(b, "01")};
  f = coding_automaton(w1);
  CHECK(f.state_count() == 2);
  CHECK(f.transition_count() == 3);

  std::vector<Word> w2{word(b, "00"), word(b, "11")};
  f = coding_automaton(w2);
  CHECK(f.state_count() == 3);
  CHECK(f.transition_count() == 4);

  for (const auto& words : {w0, w1, w2}) {
    const auto flower = oracle::plain(coding_automaton(words));
    const auto prefixes = concatenation_prefixes(words, 6);
    for (std::size_t len = 0; len <= 6; ++len)
      oracle::for_each_word(2, len, [&](const Word& w) { CHECK(oracle::extendable(flower, w) == prefixes.count(w)); });
  }

  std::vector<Word> bad{Word{}};
  CHECK_THROWS_AS(coding_automaton(bad), InputError);
}

TEST_CASE("coding decisions") {
  const Alphabet b = binary_alphabet();
  std::vector<Word> fib{Word{0}, word(b, "01")}, doubles{word(b, "00"), word(b, "11")}, zero{Word{0}};
  const auto d = decide_coding(fib);
  REQUIRE(d.answer);
  CHECK_FALSE(decide_coding(doubles).answer);
  CHECK_FALSE(decide_coding(zero).answer);
  // The Fibonacci word factors greedily over {0, 01}.
  const Word f = generate_prefix(sigma_fib(), 0, 32);
  bool factors = true;
  for (std::size_t i = 0; i < f.size() && factors;) {
    if (f[i] != 0) factors = false;
    i += (i + 1 < f.size() && f[i + 1] == 1) ? 2 : 1;
  }
  CHECK(factors);
  CHECK(oracle::extendable(oracle::plain(coding_automaton(fib)), f));
}

TEST_CASE("totality search examples") {
  const auto full = find_total_reachable(full1());
  REQUIRE(full);
  CHECK(full->labels.empty());

  const auto l = find_total_reachable(l0_image());
  REQUIRE(l);
  REQUIRE(l->labels.size() == 1);
  CHECK(sturmian_kit().morphisms[l->labels[0]].name == "L0");
  const auto img = desubstitute(l0_image(), kit_member("L0").map);
  CHECK(img.has_transition(0, 0, 0));
  CHECK(img.has_transition(1, 0, 0));
  CHECK(img.has_transition(0, 1, 1));
  CHECK(img.has_transition(1, 1, 1));
  CHECK(img.transition_count() == 4);

  CHECK_FALSE(find_total_reachable(loop0()));
}

TEST_CASE("property (H) examples") {
  CHECK(property_h(full1(), 0));
  CHECK_FALSE(property_h(loop0(), 0));
  CHECK(property_h(no_transitions(), 0));
}

TEST_CASE("Fibonacci totality examples") {
  CHECK(fibonacci_totality(full1()) == std::optional<std::size_t>{0});
  auto a = l0_image();
  a.add_transition(1, 1, 1);
  const auto n = fibonacci_totality(a);
  REQUIRE(n);
  CHECK(*n <= 3);
  CHECK(is_total(orbit(a, sigma_fib()).automata[*n]));
  CHECK_FALSE(fibonacci_totality(loop0()));
}

TEST_CASE("property: Sturmian witnesses are accepted and balanced") {
  std::mt19937_64 rng(gen::base_seed() + 62);
  int yes = 0;
  for (int i = 0; i < 150; ++i) {
    const auto a = gen::automaton(rng, binary_alphabet(), 1 + i % 4, 0.35 + 0.05 * (i % 5));
    const auto d = decide_sturmian(a);
    if (!d.answer) continue;
    ++yes;
    const Word p = directive_witness_prefix(a, sturmian_kit().morphisms, *d.lasso, 48);
    CHECK(oracle::extendable(oracle::plain(a), p));
    CHECK(oracle::balanced(p));
    CHECK(has_type(Word(d.lasso->cycle.begin(), d.lasso->cycle.end()), MorphismType::type0));
    CHECK(has_type(Word(d.lasso->cycle.begin(), d.lasso->cycle.end()), MorphismType::type1));
  }
  CHECK(yes > 0);
}

TEST_CASE("property: self-reproducing vertices under L0...L1 have property (H)") {
  std::mt19937_64 rng(gen::base_seed() + 63);
  const std::vector<NamedSubstitution> kit{kit_member("L0"), kit_member("L1")};
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const auto a = gen::any_automaton(rng, binary_alphabet(), 4);
    const auto m = build_meta(a, kit);
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      bool on_cycle = false;
      for (std::size_t len = 2; len <= 6 && !on_cycle; ++len)
        oracle::for_each_word(2, len - 2, [&](const Word& middle) {
          std::vector<std::size_t> labels{0};
          labels.insert(labels.end(), middle.begin(), middle.end());
          labels.push_back(1);
          if (m.follow(v, labels) == std::optional<std::size_t>{v}) on_cycle = true;
        });
      if (!on_cycle) continue;
      ++checked;
      for (std::size_t q = 0; q < m.vertices[v].state_count(); ++q) CHECK(property_h(m.vertices[v], q));
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("property: (H) everywhere means empty or total") {
  std::mt19937_64 rng(gen::base_seed() + 64);
  int found = 0, totals = 0;
  for (int attempt = 0; found < 200 && attempt < 200000; ++attempt) {
    const auto a = gen::automaton(rng, binary_alphabet(), 1 + attempt % 5, 0.1 + 0.1 * (attempt % 7), 0.5);
    if (!all_h(a)) continue;
    ++found;
    totals += is_total(a);
    CHECK((is_empty_infinite(a) || is_total(a)));
  }
  CHECK(found == 200);
  CHECK(totals > 0);
}
