#include "omegasub/alphabet.hpp"

#include "omegasub/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace omegasub {

namespace {
const std::vector<std::string> kNoSymbols;
}

Alphabet::Alphabet(std::vector<std::string> symbols) {
  if (symbols.empty()) throw InputError("alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto& s : symbols) {
    if (s.empty()) throw InputError("alphabet symbols must be nonempty");
    if (s == "eps") throw InputError("'eps' is reserved for the empty word");
    if (std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) || c == '#'; }))
      throw InputError("invalid symbol '" + s + "'");
    if (!seen.insert(s).second) throw InputError("duplicate symbol '" + s + "'");
    if (s.size() != 1) compact_ = false;
  }
  symbols_ = std::make_shared<const std::vector<std::string>>(std::move(symbols));
}

const std::vector<std::string>& Alphabet::symbols() const { return symbols_ ? *symbols_ : kNoSymbols; }

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  const auto& s = symbols();
  auto it = std::find(s.begin(), s.end(), symbol);
  if (it == s.end()) return std::nullopt;
  return static_cast<Letter>(it - s.begin());
}

Letter Alphabet::at(std::string_view symbol) const {
  if (auto a = find(symbol)) return *a;
  throw InputError("unknown letter '" + std::string(symbol) + "'");
}

bool Alphabet::contains(std::span<const Letter> w) const {
  return std::all_of(w.begin(), w.end(), [&](Letter a) { return a < size(); });
}

Word Alphabet::parse_word(std::string_view token) const {
  if (token == "eps") return {};
  const auto& syms = symbols();
  const bool dotted = !compact_ && token.find('.') != std::string_view::npos &&
                      std::none_of(syms.begin(), syms.end(), [](const std::string& s) { return s.find('.') != std::string::npos; });
  Word word;
  if (dotted) {
    std::size_t start = 0;
    while (start <= token.size()) {
      auto end = token.find('.', start);
      if (end == std::string_view::npos) end = token.size();
      word.push_back(at(token.substr(start, end - start)));
      start = end + 1;
    }
    return word;
  }
  std::size_t pos = 0;
  while (pos < token.size()) {
    std::size_t best = 0;
    Letter best_letter = 0;
    for (Letter a = 0; a < syms.size(); ++a) {
      const auto& s = syms[a];
      if (s.size() > best && token.substr(pos, s.size()) == s) {
        best = s.size();
        best_letter = a;
      }
    }
    if (best == 0) throw InputError("cannot split '" + std::string(token) + "' into letters");
    word.push_back(best_letter);
    pos += best;
  }
  return word;
}

std::string Alphabet::format(std::span<const Letter> w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact_ && i > 0) out += '.';
    out += symbol(w[i]);
  }
  return out;
}

bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
  return lhs.symbols_ == rhs.symbols_ || lhs.symbols() == rhs.symbols();
}

}  // namespace omegasub
