#include "omegasub/text_format.hpp"

#include "omegasub/errors.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace omegasub {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string token; in >> token;) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_header(const Line& line, std::string_view key) { return line.tokens[0] == std::string(key) + ":"; }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? " " : "") + items[i];
  return out;
}

std::vector<std::string> members_named(const OmegaAutomaton& automaton, const StateSet& set) {
  std::vector<std::string> out;
  for (auto q = set.find_first(); q != StateSet::npos; q = set.find_next(q)) out.push_back(automaton.state_name(q));
  return out;
}

struct AutomatonParse {
  OmegaAutomaton automaton;
  StateSet accepting;
};

AutomatonParse parse_with_headers(std::string_view text, const std::string& source, bool buchi) {
  const auto lines = tokenize(text);
  std::optional<Line> alphabet_line, states_line, initial_line, accepting_line;
  std::vector<Line> transitions;
  for (const auto& line : lines) {
    std::optional<Line>* slot = nullptr;
    if (is_header(line, "alphabet")) slot = &alphabet_line;
    else if (is_header(line, "states")) slot = &states_line;
    else if (is_header(line, "initial")) slot = &initial_line;
    else if (is_header(line, "accepting")) {
      if (!buchi) throw ParseError(source, line.number, line.tokens[0], "'accepting:' is only valid in Büchi files");
      slot = &accepting_line;
    }
    if (slot) {
      if (*slot) throw ParseError(source, line.number, line.tokens[0], "duplicate header");
      if (!transitions.empty()) throw ParseError(source, line.number, line.tokens[0], "header after transitions");
      *slot = line;
      continue;
    }
    if (line.tokens[0].back() == ':') throw ParseError(source, line.number, line.tokens[0], "unknown header");
    transitions.push_back(line);
  }
  const auto missing = [&](const char* what) {
    return ParseError(source, lines.empty() ? 1 : lines.front().number, "", std::string("missing '") + what + ":' line");
  };
  if (!alphabet_line) throw missing("alphabet");
  if (!states_line) throw missing("states");
  if (!initial_line) throw missing("initial");
  if (buchi && !accepting_line) throw missing("accepting");

  const auto rest = [](const Line& line) { return std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()); };
  Alphabet alphabet;
  try {
    alphabet = Alphabet(rest(*alphabet_line));
  } catch (const InputError& e) {
    throw ParseError(source, alphabet_line->number, "", e.what());
  }
  std::optional<OmegaAutomaton> automaton;
  try {
    automaton.emplace(alphabet, rest(*states_line));
  } catch (const InputError& e) {
    throw ParseError(source, states_line->number, "", e.what());
  }

  const auto state = [&](const Line& line, const std::string& token) {
    if (auto q = automaton->find_state(token)) return *q;
    throw ParseError(source, line.number, token, "unknown state");
  };
  for (const auto& name : rest(*initial_line)) automaton->add_initial(state(*initial_line, name));
  StateSet accepting(automaton->state_count());
  if (accepting_line)
    for (const auto& name : rest(*accepting_line)) accepting.set(state(*accepting_line, name));

  for (const auto& line : transitions) {
    if (line.tokens.size() != 3)
      throw ParseError(source, line.number, line.tokens.back(), "expected '<src> <symbol> <dst>'");
    const auto from = state(line, line.tokens[0]);
    const auto a = alphabet.find(line.tokens[1]);
    if (!a) throw ParseError(source, line.number, line.tokens[1], "unknown symbol");
    automaton->add_transition(from, *a, state(line, line.tokens[2]));
  }
  return {std::move(*automaton), std::move(accepting)};
}

std::string print_body(const OmegaAutomaton& automaton, const StateSet* accepting) {
  std::ostringstream out;
  out << "alphabet: " << join(automaton.alphabet().symbols()) << '\n';
  out << "states: " << join(automaton.state_names()) << '\n';
  out << "initial:";
  for (const auto& name : members_named(automaton, automaton.initial())) out << ' ' << name;
  out << '\n';
  if (accepting) {
    out << "accepting:";
    for (const auto& name : members_named(automaton, *accepting)) out << ' ' << name;
    out << '\n';
  }
  for (std::size_t q = 0; q < automaton.state_count(); ++q)
    for (Letter a = 0; a < automaton.alphabet().size(); ++a) {
      const StateSet& row = automaton.relation(a).row(q);
      for (auto t = row.find_first(); t != StateSet::npos; t = row.find_next(t))
        out << automaton.state_name(q) << ' ' << automaton.alphabet().symbol(a) << ' ' << automaton.state_name(t)
            << '\n';
    }
  return out.str();
}

}  // namespace

OmegaAutomaton parse_automaton(std::string_view text, const std::string& source) {
  return parse_with_headers(text, source, false).automaton;
}

std::string print_automaton(const OmegaAutomaton& automaton) { return print_body(automaton, nullptr); }

BuchiAutomaton parse_buchi(std::string_view text, const std::string& source) {
  auto parsed = parse_with_headers(text, source, true);
  return {std::move(parsed.automaton), std::move(parsed.accepting)};
}

std::string print_buchi(const BuchiAutomaton& automaton) { return print_body(automaton.graph, &automaton.accepting); }

NamedSubstitution parse_substitution(std::string_view text, const std::string& source,
                                     const std::optional<Alphabet>& context) {
  const auto lines = tokenize(text);
  std::string name;
  std::optional<Line> alphabet_line;
  std::vector<Line> rules;
  for (const auto& line : lines) {
    if (is_header(line, "name")) {
      if (line.tokens.size() != 2) throw ParseError(source, line.number, "", "expected 'name: <identifier>'");
      name = line.tokens[1];
    } else if (is_header(line, "alphabet")) {
      alphabet_line = line;
    } else if (line.tokens.size() == 3 && line.tokens[1] == "->") {
      rules.push_back(line);
    } else {
      throw ParseError(source, line.number, line.tokens[0], "expected '<letter> -> <word>'");
    }
  }
  if (name.empty()) name = std::filesystem::path(source).stem().string();

  std::vector<std::string> symbols;
  if (alphabet_line) {
    symbols.assign(alphabet_line->tokens.begin() + 1, alphabet_line->tokens.end());
  } else {
    for (const auto& rule : rules) symbols.push_back(rule.tokens[0]);
  }
  Alphabet declared;
  try {
    declared = Alphabet(symbols);
  } catch (const InputError& e) {
    throw ParseError(source, alphabet_line ? alphabet_line->number : 1, "", e.what());
  }
  Alphabet alphabet = declared;
  if (context) {
    auto mine = declared.symbols(), theirs = context->symbols();
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    if (mine != theirs)
      throw ParseError(source, alphabet_line ? alphabet_line->number : 1, "",
                       "substitution alphabet differs from the automaton alphabet");
    alphabet = *context;
  }

  std::vector<std::optional<Word>> images(alphabet.size());
  for (const auto& rule : rules) {
    const auto a = alphabet.find(rule.tokens[0]);
    if (!a) throw ParseError(source, rule.number, rule.tokens[0], "unknown letter");
    if (images[*a]) throw ParseError(source, rule.number, rule.tokens[0], "letter defined twice");
    try {
      images[*a] = alphabet.parse_word(rule.tokens[2]);
    } catch (const InputError& e) {
      throw ParseError(source, rule.number, rule.tokens[2], e.what());
    }
  }
  std::vector<Word> resolved;
  for (Letter a = 0; a < alphabet.size(); ++a) {
    if (!images[a]) throw ParseError(source, lines.empty() ? 1 : lines.back().number, alphabet.symbol(a), "letter has no image");
    resolved.push_back(std::move(*images[a]));
  }
  return {name, Homomorphism(alphabet, std::move(resolved))};
}

std::string print_substitution(const NamedSubstitution& substitution) {
  const Alphabet& alphabet = substitution.map.alphabet();
  std::ostringstream out;
  out << "name: " << substitution.name << '\n';
  out << "alphabet: " << join(alphabet.symbols()) << '\n';
  for (Letter a = 0; a < alphabet.size(); ++a) {
    const Word& image = substitution.map.image(a);
    out << alphabet.symbol(a) << " -> " << (image.empty() ? "eps" : alphabet.format(image)) << '\n';
  }
  return out.str();
}

std::vector<Word> parse_word_set(std::string_view text, const Alphabet& alphabet, const std::string& source) {
  std::vector<Word> words;
  for (const auto& line : tokenize(text)) {
    if (line.tokens.size() != 1) throw ParseError(source, line.number, line.tokens[1], "expected one word per line");
    try {
      words.push_back(alphabet.parse_word(line.tokens[0]));
    } catch (const InputError& e) {
      throw ParseError(source, line.number, line.tokens[0], e.what());
    }
  }
  return words;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace omegasub
