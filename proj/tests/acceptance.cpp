// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace omegasub;
using namespace fixtures;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && failures_++ < 5) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  Result result(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + notes_.str()};
  }

 private:
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t g_seed = 20261016;

// Random binary automata with at most six states and a spread of densities.
const std::vector<OmegaAutomaton>& corpus() {
  static const std::vector<OmegaAutomaton> automata = [] {
    std::mt19937_64 rng(g_seed);
    std::vector<OmegaAutomaton> out;
    for (int i = 0; i < 600; ++i)
      out.push_back(gen::automaton(rng, binary_alphabet(), 1 + i % 6, 0.15 + 0.05 * (i % 9), 0.3 + 0.1 * (i % 4)));
    return out;
  }();
  return automata;
}

Result criterion1() {
  Check c;
  const auto start = Clock::now();
  const auto o = orbit(triangle(), sigma_swap());
  c.expect(o.cycle_start == 0 && o.repeat_index == 2,
           "orbit gave (" + std::to_string(o.cycle_start) + "," + std::to_string(o.repeat_index) + ")");
  const auto d = decide_fixed_point(triangle(), sigma_swap());
  c.expect(d.answer(), "fixed point not found");
  const auto* lasso = std::get_if<WordLasso>(&d.witness);
  c.expect(lasso && lasso->stem.empty() && lasso->cycle == Word{0}, "witness is not 0^ω");
  c.expect(witness_prefix(d, sigma_swap(), 64) == Word(64, 0), "witness prefix is not 0^64");
  const double t = seconds_since(start);
  c.expect(t < 1.0, "took " + std::to_string(t) + " s");
  return c.result("(n,m)=(0,2), witness 0^ω, " + std::to_string(t) + " s");
}

Result criterion2() {
  Check c;
  const auto start = Clock::now();
  const auto h = automaton_h();
  c.expect(desubstitute(h, sigma_h()) == h, "not stable");
  c.expect(!is_total(h), "reported total");
  const auto subs = named("sigmaH", sigma_h());
  const auto m = build_meta(h, subs);
  c.expect(m.vertex_count() == 1, std::to_string(m.vertex_count()) + " vertices");
  for (const auto& v : m.vertices) c.expect(!is_total(v), "total vertex present");
  const auto d = decide_inf_desub(h, subs);
  c.expect(d.answer && d.lasso && d.lasso->stem.empty() && d.lasso->cycle == std::vector<std::size_t>{0},
           "lasso is not (ε,[sigmaH])");
  const double t = seconds_since(start);
  c.expect(t < 1.0, "took " + std::to_string(t) + " s");
  return c.result("stable, not total, 1 vertex, lasso (ε,[sigmaH]), " + std::to_string(t) + " s");
}

Result criterion3() {
  Check c;
  const auto start = Clock::now();
  std::mt19937_64 rng(g_seed + 3);
  for (int i = 0; i < 1000; ++i) {
    const Alphabet ab = gen::alphabet_of_size(1 + i % 3);
    const auto a = gen::any_automaton(rng, ab, 5);
    const auto s = gen::homomorphism(rng, ab, 4, true), t = gen::homomorphism(rng, ab, 4, true);
    c.expect(desubstitute(desubstitute(a, s), t) == desubstitute(a, compose(s, t)), "case " + std::to_string(i));
  }
  const double t = seconds_since(start);
  c.expect(t < 30.0, "took " + std::to_string(t) + " s");
  return c.result("1000 cases, " + std::to_string(t) + " s");
}

Result criterion4() {
  Check c;
  std::mt19937_64 rng(g_seed + 4);
  for (int i = 0; i < 1000; ++i) {
    const Alphabet ab = gen::alphabet_of_size(1 + i % 3);
    const auto a = gen::any_automaton(rng, ab, 5);
    const auto s = gen::homomorphism(rng, ab, 4, true);
    const Word w = gen::word(rng, ab, rng() % 7);
    c.expect(path_relation(desubstitute(a, s), w) == path_relation(a, substitute(s, w)), "case " + std::to_string(i));
  }
  return c.result("1000 cases");
}

Result criterion5() {
  Check c;
  const auto start = Clock::now();
  const auto kit = sturmian_kit().morphisms;
  const auto alt = alternation_buchi();
  std::size_t yes = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const bool scc = decide_sturmian(corpus()[i]).answer;
    const bool product = decide_constrained(corpus()[i], kit, alt).answer;
    yes += scc;
    c.expect(scc == product, "automaton " + std::to_string(i));
  }
  const double t = seconds_since(start);
  c.expect(t < 300.0, "took " + std::to_string(t) + " s");
  return c.result(std::to_string(corpus().size()) + " automata, " + std::to_string(yes) + " Sturmian, " +
                  std::to_string(t) + " s");
}

Result criterion6() {
  Check c;
  const auto kit = sturmian_kit().morphisms;
  std::mt19937_64 rng(g_seed + 6);
  std::size_t checked = 0, deeper = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& a = corpus()[i];
    if (!decide_sturmian(a).answer) continue;
    ++checked;
    const auto path = find_total_reachable(a);
    c.expect(path.has_value(), "no total vertex for automaton " + std::to_string(i));
    if (!path) continue;
    deeper += !path->labels.empty();
    std::vector<Homomorphism> maps;
    for (auto l : path->labels) maps.push_back(kit[l].map);
    const Homomorphism psi = compose_all(a.alphabet(), maps);
    c.expect(is_total(desubstitute(a, psi)), "composed desubstitution not total, automaton " + std::to_string(i));
    const auto plain = oracle::plain(a);
    for (int k = 0; k < 100; ++k)
      c.expect(oracle::extendable(plain, substitute(psi, gen::word(rng, a.alphabet(), 40))),
               "expansion rejected, automaton " + std::to_string(i));
  }
  c.expect(checked > 0, "no Sturmian automaton in the corpus");
  return c.result(std::to_string(checked) + " Sturmian automata (" + std::to_string(deeper) +
                  " not total themselves), 100 expansions each");
}

Result criterion7() {
  Check c;
  const auto d = decide_pure_substitutive(full1(), sigma_fib());
  const auto* g = std::get_if<GeneratingLetter>(&d.witness);
  c.expect(d.answer() && g && g->letter == 0, "Full1 does not yield letter 0");
  const Word p = witness_prefix(d, sigma_fib(), 8);
  c.expect(binary_alphabet().format(p) == "01001010", "prefix " + binary_alphabet().format(p));
  c.expect(oracle::extendable(oracle::plain(full1()), p), "prefix not accepted");
  std::size_t accepting = 0, deeper = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& a = corpus()[i];
    if (!oracle::pure_substitutive(oracle::plain(a), sigma_fib().images())) continue;
    ++accepting;
    const auto n = fibonacci_totality(a);
    c.expect(n.has_value(), "no total power for automaton " + std::to_string(i));
    deeper += n.value_or(0) > 0;
    if (n) c.expect(is_total(orbit(a, sigma_fib()).automata[*n]), "reported power not total");
  }
  c.expect(accepting > 0, "no corpus automaton accepts f");
  return c.result("prefix 01001010; " + std::to_string(accepting) + " corpus automata accept f (" +
                  std::to_string(deeper) + " with n > 0), all reach totality");
}

Result criterion8() {
  Check c;
  const Alphabet b = binary_alphabet();
  const auto timed = [&](std::vector<Word> words, bool expected, const std::string& name) {
    const auto start = Clock::now();
    const bool got = decide_coding(words).answer;
    const double t = seconds_since(start);
    c.expect(got == expected, name + " answered " + (got ? "yes" : "no"));
    c.expect(t < 1.0, name + " took " + std::to_string(t) + " s");
  };
  timed({Word{0}, word(b, "01")}, true, "{0,01}");
  timed({word(b, "00"), word(b, "11")}, false, "{00,11}");
  timed({Word{0}}, false, "{0}");
  return c.result("{0,01} yes, {00,11} no, {0} no");
}

Result criterion9() {
  Check c;
  std::mt19937_64 rng(g_seed + 9);
  std::size_t totals = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto a = gen::automaton(rng, binary_alphabet(), 1 + i % 4, 0.2 + 0.1 * (i % 6), 0.25 + 0.25 * (i % 3));
    const auto plain = oracle::plain(a);
    const bool total = is_total(a);
    totals += total;
    c.expect(total == oracle::total(plain), "automaton " + std::to_string(i));
    if (i % 10 == 0) c.expect(!total || oracle::all_words_extendable_literal(plain, 12), "literal check " + std::to_string(i));
  }
  return c.result("2000 automata, " + std::to_string(totals) + " total");
}

Result criterion10() {
  Check c;
  std::mt19937_64 rng(g_seed + 10);
  std::size_t found = 0, totals = 0, empties = 0;
  for (std::size_t attempt = 0; found < 500 && attempt < 2000000; ++attempt) {
    const auto a = gen::automaton(rng, binary_alphabet(), 1 + attempt % 6, 0.1 + 0.1 * (attempt % 8), 0.5);
    bool all = true;
    for (std::size_t q = 0; q < a.state_count() && all; ++q) all = property_h(a, q);
    if (!all) continue;
    ++found;
    const bool empty = is_empty_infinite(a), total = is_total(a);
    empties += empty;
    totals += total;
    c.expect(empty || total, "neither empty nor total");
  }
  c.expect(found == 500, "only " + std::to_string(found) + " samples");
  return c.result(std::to_string(found) + " automata: " + std::to_string(empties) + " empty, " +
                  std::to_string(totals) + " total");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--seed") g_seed = std::strtoull(argv[i + 1], nullptr, 10);
  std::cout << "seed " << g_seed << '\n';

  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"1 triangle orbit and fixed point", criterion1},
      {"2 self-similar automaton H", criterion2},
      {"3 composition law", criterion3},
      {"4 finite-word contract", criterion4},
      {"5 SCC vs product Sturmian decision", criterion5},
      {"6 total vertex behind every Sturmian automaton", criterion6},
      {"7 Fibonacci word and totality", criterion7},
      {"8 coding decisions", criterion8},
      {"9 totality vs enumeration", criterion9},
      {"10 property (H) dichotomy", criterion10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.ok;
    std::cout << (r.ok ? "PASS" : "FAIL") << "  criterion " << name << "  " << r.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion/criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
