#include "cli.hpp"

#include "omegasub/omegasub.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace omegasub::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string automaton;
  std::vector<std::string> substs;
  std::string buchi;
  std::string words;
  std::string out_path;
  std::size_t witness_len = 64;
  std::size_t vertex_budget = kDefaultVertexBudget;
  bool json = false;
  std::uint64_t seed = 1;
};

/// Result of one subcommand: the verdict plus a structured report.
struct Report {
  Report(std::string p, Verdict v) : problem(std::move(p)), verdict(v) {}
  std::string problem;
  Verdict verdict = Verdict::no;
  json witness;
  json diagnostics = json::object();
  std::string text;  // printed instead of the summary when set and not --json
};

class Session {
 public:
  explicit Session(const Options& options) : options_(options) {}

  const OmegaAutomaton& automaton() {
    if (!automaton_) {
      if (options_.automaton.empty()) throw InputError("--automaton is required");
      automaton_ = parse_automaton(read_file(options_.automaton), options_.automaton);
    }
    return *automaton_;
  }

  std::vector<NamedSubstitution> substitutions() {
    std::vector<NamedSubstitution> out;
    for (const auto& path : options_.substs) out.push_back(parse_substitution(read_file(path), path, automaton().alphabet()));
    return out;
  }

  NamedSubstitution substitution(std::size_t index, std::size_t expected) {
    if (options_.substs.size() != expected)
      throw InputError("expected exactly " + std::to_string(expected) + " --subst option(s)");
    return substitutions()[index];
  }

  const Options& options() const { return options_; }

 private:
  const Options& options_;
  std::optional<OmegaAutomaton> automaton_;
};

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unsupported: return "unsupported";
  }
  return "no";
}

json names_of(const std::vector<NamedSubstitution>& substitutions, const std::vector<std::size_t>& labels) {
  json out = json::array();
  for (auto s : labels) out.push_back(substitutions[s].name);
  return out;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw std::logic_error("witness failed validation: " + what);
}

json single_witness(const SingleDecision& decision, const Alphabet& alphabet) {
  if (const auto* lasso = std::get_if<WordLasso>(&decision.witness))
    return {{"type", "fixed-letter-lasso"}, {"stem", alphabet.format(lasso->stem)}, {"cycle", alphabet.format(lasso->cycle)}};
  if (const auto* gen = std::get_if<GeneratingLetter>(&decision.witness))
    return {{"type", "generating-letter"},
            {"letter", alphabet.symbol(gen->letter)},
            {"orbit_index", gen->orbit_index},
            {"fixed_prefix", alphabet.format(gen->fixed_prefix)}};
  return nullptr;
}

Report report_single(const std::string& problem, const SingleDecision& decision, const OmegaAutomaton& automaton,
                     const Homomorphism& sigma, std::size_t len) {
  Report r{problem, decision.verdict};
  r.witness = single_witness(decision, automaton.alphabet());
  r.diagnostics = {{"n", decision.cycle_start}, {"m", decision.repeat_index}};
  if (!decision.note.empty()) r.diagnostics["note"] = decision.note;
  if (decision.answer() && !r.witness.is_null()) {
    const Word prefix = witness_prefix(decision, sigma, len);
    require(accepts_extendable(automaton, prefix), "witness prefix is not accepted");
    r.witness["prefix"] = automaton.alphabet().format(prefix);
  }
  return r;
}

Report report_directive(const std::string& problem, const DirectiveDecision& decision, const OmegaAutomaton& automaton,
                        const std::vector<NamedSubstitution>& substitutions, std::size_t len) {
  Report r{problem, decision.answer ? Verdict::yes : Verdict::no};
  r.diagnostics = {{"meta_vertices", decision.vertex_count}};
  if (decision.lasso) {
    const Word prefix = directive_witness_prefix(automaton, substitutions, *decision.lasso, len);
    require(accepts_extendable(automaton, prefix), "directive witness prefix is not accepted");
    r.witness = {{"type", "directive-lasso"},
                 {"stem", names_of(substitutions, decision.lasso->stem)},
                 {"cycle", names_of(substitutions, decision.lasso->cycle)},
                 {"prefix", automaton.alphabet().format(prefix)}};
  }
  return r;
}

std::string lasso_text(const json& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n.get<std::string>();
  return out.empty() ? "ε" : out;
}

void print_human(const Report& r, std::ostream& out) {
  if (!r.text.empty()) {
    out << r.text;
    return;
  }
  out << r.problem << ": " << verdict_name(r.verdict) << '\n';
  if (r.witness.is_object()) {
    const std::string type = r.witness.value("type", "");
    if (type == "generating-letter") {
      const std::string p = r.witness["fixed_prefix"].get<std::string>();
      out << "witness: " << (p.empty() ? "" : p + " · ") << "lim σ^k(" << r.witness["letter"].get<std::string>()
          << ") at orbit index " << r.witness["orbit_index"] << '\n';
    } else if (type == "fixed-letter-lasso") {
      out << "witness: " << r.witness["stem"].get<std::string>() << " (" << r.witness["cycle"].get<std::string>()
          << ")^ω\n";
    } else if (type == "directive-lasso" || type == "totality-path") {
      if (r.witness.contains("stem"))
        out << "directive sequence: " << lasso_text(r.witness["stem"]) << " (" << lasso_text(r.witness["cycle"])
            << ")^ω\n";
      if (r.witness.contains("path")) out << "path: " << lasso_text(r.witness["path"]) << '\n';
    }
    if (r.witness.contains("prefix")) out << "prefix: " << r.witness["prefix"].get<std::string>() << '\n';
  }
  for (const auto& [key, value] : r.diagnostics.items()) out << key << ": " << value.dump() << '\n';
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::yes: return kYes;
    case Verdict::no: return kNo;
    case Verdict::unsupported: return kInputError;
  }
  return kNo;
}

// ---- subcommands -----------------------------------------------------------

Report cmd_desub(Session& s) {
  const auto sigma = s.substitution(0, 1);
  const OmegaAutomaton result = desubstitute(s.automaton(), sigma.map);
  Report r{"desub", Verdict::yes};
  r.text = print_automaton(result);
  r.witness = {{"type", "automaton"}, {"automaton", r.text}};
  return r;
}

Report cmd_orbit(Session& s) {
  const auto sigma = s.substitution(0, 1);
  const Orbit o = orbit(s.automaton(), sigma.map, s.options().vertex_budget);
  Report r{"orbit", Verdict::yes};
  r.diagnostics = {{"n", o.cycle_start}, {"m", o.repeat_index}};
  std::ostringstream text;
  text << "n=" << o.cycle_start << " m=" << o.repeat_index << '\n';
  for (std::size_t k = 0; k <= o.repeat_index; ++k)
    text << "# sigma^-" << k << ": " << o.automata[k].transition_count() << " transitions"
         << (is_empty_infinite(o.automata[k]) ? ", empty" : "") << '\n';
  r.text = text.str();
  return r;
}

Report cmd_fixed_point_power(Session& s) {
  const auto sigma = s.substitution(0, 1);
  const auto d = decide_fixed_point_power(s.automaton(), sigma.map, s.options().vertex_budget);
  return report_single("fixed-point-power", d, s.automaton(), sigma.map, s.options().witness_len);
}

Report cmd_pure_substitutive(Session& s) {
  const auto sigma = s.substitution(0, 1);
  const auto d = decide_pure_substitutive(s.automaton(), sigma.map, s.options().vertex_budget);
  return report_single("pure-substitutive", d, s.automaton(), sigma.map, s.options().witness_len);
}

Report cmd_fixed_point(Session& s) {
  const auto sigma = s.substitution(0, 1);
  const auto d = decide_fixed_point(s.automaton(), sigma.map, s.options().vertex_budget);
  return report_single("fixed-point", d, s.automaton(), sigma.map, s.options().witness_len);
}

Report cmd_morphic(Session& s) {
  const auto sigma = s.substitution(0, 2);
  const auto tau = s.substitution(1, 2);
  const auto d = decide_morphic(s.automaton(), sigma.map, tau.map, s.options().vertex_budget);
  Report r{"morphic", d.verdict};
  r.witness = single_witness(d, s.automaton().alphabet());
  r.diagnostics = {{"n", d.cycle_start}, {"m", d.repeat_index}};
  if (!d.note.empty()) r.diagnostics["note"] = d.note;
  if (d.answer()) {
    const Word prefix = morphic_witness_prefix(d, sigma.map, tau.map, s.options().witness_len);
    require(accepts_extendable(s.automaton(), prefix), "morphic witness prefix is not accepted");
    r.witness["tau"] = tau.name;
    r.witness["prefix"] = s.automaton().alphabet().format(prefix);
  }
  return r;
}

Report cmd_inf_desub(Session& s) {
  const auto subs = s.substitutions();
  if (subs.empty()) throw InputError("at least one --subst is required");
  const auto d = decide_inf_desub(s.automaton(), subs, s.options().vertex_budget);
  return report_directive("inf-desub", d, s.automaton(), subs, s.options().witness_len);
}

Report cmd_constrained(Session& s) {
  const auto subs = s.substitutions();
  if (subs.empty()) throw InputError("at least one --subst is required");
  if (s.options().buchi.empty()) throw InputError("--buchi is required");
  const BuchiAutomaton constraint = parse_buchi(read_file(s.options().buchi), s.options().buchi);
  const auto d = decide_constrained(s.automaton(), subs, constraint, s.options().vertex_budget);
  return report_directive("constrained", d, s.automaton(), subs, s.options().witness_len);
}

Report cmd_sturmian(Session& s) {
  const auto d = decide_sturmian(s.automaton(), s.options().vertex_budget);
  return report_directive("sturmian", d, s.automaton(), sturmian_kit(s.automaton().alphabet()).morphisms,
                          s.options().witness_len);
}

Report cmd_coding(Session& s) {
  if (s.options().words.empty()) throw InputError("--words is required");
  const auto words = parse_word_set(read_file(s.options().words), binary_alphabet(), s.options().words);
  const OmegaAutomaton flower = coding_automaton(words);
  const auto d = decide_sturmian(flower, s.options().vertex_budget);
  Report r = report_directive("coding", d, flower, sturmian_kit().morphisms, s.options().witness_len);
  r.diagnostics["flower_states"] = flower.state_count();
  return r;
}

Report cmd_totality(Session& s) {
  const OmegaAutomaton& a = s.automaton();
  const auto subs = s.options().substs.empty() ? sturmian_kit(a.alphabet()).morphisms : s.substitutions();
  const auto path = find_total_reachable(a, subs, s.options().vertex_budget);
  Report r{"totality", path ? Verdict::yes : Verdict::no};
  r.diagnostics = {{"total", is_total(a)}};
  if (path) {
    // Spot-check the inclusion sigma(A^N) ⊆ L∞(A) on random words.
    std::vector<Homomorphism> maps;
    for (auto l : path->labels) maps.push_back(subs[l].map);
    const Homomorphism composed = compose_all(a.alphabet(), maps);
    std::mt19937_64 rng(s.options().seed);
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(a.alphabet().size() - 1));
    for (int sample = 0; sample < 16; ++sample) {
      Word x(s.options().witness_len);
      for (auto& c : x) c = letter(rng);
      require(accepts_extendable(a, substitute(composed, x)), "random expansion through the totality path rejected");
    }
    r.witness = {{"type", "totality-path"}, {"path", names_of(subs, path->labels)}, {"target", path->target}};
  }
  return r;
}

Report cmd_property_h(Session& s) {
  const OmegaAutomaton& a = s.automaton();
  Report r{"property-h", Verdict::yes};
  json states = json::object();
  std::ostringstream text;
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    const bool h = property_h(a, q);
    states[a.state_name(q)] = h;
    text << a.state_name(q) << ": " << (h ? "H" : "not H") << '\n';
    if (!h) r.verdict = Verdict::no;
  }
  r.witness = {{"type", "property-h"}, {"states", states}};
  r.text = "property-h: " + verdict_name(r.verdict) + "\n" + text.str();
  return r;
}

Report cmd_fibonacci(Session& s) {
  const auto n = fibonacci_totality(s.automaton(), s.options().vertex_budget);
  Report r{"fibonacci", n ? Verdict::yes : Verdict::no};
  if (n) r.witness = {{"type", "fibonacci-power"}, {"n", *n}};
  r.diagnostics = {{"accepts_fibonacci",
                    decide_pure_substitutive(s.automaton(), fibonacci_substitution(s.automaton().alphabet()),
                                             s.options().vertex_budget)
                        .answer()}};
  if (n) r.text = "fibonacci: yes\nn=" + std::to_string(*n) + "\n";
  return r;
}

Report cmd_export_dot(Session& s) {
  std::string dot;
  if (s.options().substs.empty()) {
    dot = to_dot(s.automaton());
  } else {
    dot = to_dot(build_meta(s.automaton(), s.substitutions(), s.options().vertex_budget));
  }
  Report r{"export-dot", Verdict::yes};
  if (s.options().out_path.empty()) {
    r.text = dot;
  } else {
    write_file(s.options().out_path, dot);
    r.text = "wrote " + s.options().out_path + "\n";
  }
  r.witness = {{"type", "dot"}, {"dot", dot}};
  return r;
}

Report cmd_directive_language(Session& s) {
  const auto subs = s.substitutions();
  if (subs.empty()) throw InputError("at least one --subst is required");
  const OmegaAutomaton lang = directive_language(s.automaton(), subs, s.options().vertex_budget);
  Report r{"directive-language", is_empty_infinite(lang) ? Verdict::no : Verdict::yes};
  r.text = print_automaton(lang);
  r.witness = {{"type", "automaton"}, {"automaton", r.text}};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Decision procedures for substitutive and Sturmian words accepted by ω-automata", "omegasub-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--automaton", options.automaton, "automaton file");
  app.add_option("--subst", options.substs, "substitution file (repeatable, order matters)");
  app.add_option("--buchi", options.buchi, "Büchi constraint file");
  app.add_option("--words", options.words, "word-set file, one word per line");
  app.add_option("--out", options.out_path, "output file (export-dot)");
  app.add_option("--witness-len", options.witness_len, "length of witness prefixes")->capture_default_str();
  app.add_option("--vertex-budget", options.vertex_budget, "maximum meta-automaton vertices / orbit length")
      ->capture_default_str();
  app.add_flag("--json", options.json, "print a JSON report");
  app.add_option("--seed", options.seed, "seed for randomized witness checks")->capture_default_str();

  using Handler = std::function<Report(Session&)>;
  Handler selected;
  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler handler) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&selected, handler] { selected = handler; });
  };
  leaf(&app, "desub", "print sigma^-1(A)", cmd_desub);
  leaf(&app, "orbit", "iterate desubstitution until the first repeat", cmd_orbit);
  leaf(&app, "export-dot", "Graphviz export of A, or of its meta-automaton when --subst is given", cmd_export_dot);
  leaf(&app, "directive-language", "automaton of directive sequences", cmd_directive_language);

  auto* decide = app.add_subcommand("decide", "decision procedures");
  decide->require_subcommand(1);
  decide->fallthrough();
  leaf(decide, "fixed-point-power", "fixed point of some power of sigma", cmd_fixed_point_power);
  leaf(decide, "fixed-point", "fixed point of sigma", cmd_fixed_point);
  leaf(decide, "pure-substitutive", "purely substitutive word of sigma", cmd_pure_substitutive);
  leaf(decide, "morphic", "tau-image of a purely substitutive word of sigma (--subst sigma --subst tau)", cmd_morphic);
  leaf(decide, "inf-desub", "infinitely desubstitutable word", cmd_inf_desub);
  leaf(decide, "constrained", "infinitely desubstitutable word with a Büchi-constrained directive sequence",
       cmd_constrained);
  leaf(decide, "sturmian", "Sturmian word", cmd_sturmian);
  leaf(decide, "coding", "does W^ω contain a Sturmian word", cmd_coding);

  auto* analyze = app.add_subcommand("analyze", "structural analyses");
  analyze->require_subcommand(1);
  analyze->fallthrough();
  leaf(analyze, "totality", "shortest path to a total automaton in the meta-automaton", cmd_totality);
  leaf(analyze, "property-h", "property (H) per state", cmd_property_h);
  leaf(analyze, "fibonacci", "least n with sigma_f^-n(A) total", cmd_fibonacci);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    Session session(options);
    const auto start = std::chrono::steady_clock::now();
    Report report = selected(session);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (options.json) {
      json doc = {{"schema", 1},
                  {"problem", report.problem},
                  {"answer", report.verdict == Verdict::yes},
                  {"verdict", verdict_name(report.verdict)},
                  {"witness", report.witness},
                  {"diagnostics", report.diagnostics}};
      doc["diagnostics"]["elapsed_ms"] = ms;
      doc["diagnostics"]["seed"] = options.seed;
      out << doc.dump(2) << '\n';
    } else {
      print_human(report, out);
    }
    if (report.verdict == Verdict::unsupported && !options.json)
      err << "unsupported: " << report.diagnostics.value("note", std::string()) << '\n';
    return exit_code(report.verdict);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace omegasub::cli
