#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace omegasub {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Finite ordered set of symbol names. A letter is the index of its symbol.
///
/// Copies share the symbol table, so automata derived from one another
/// (desubstitution, orbit, meta-automaton vertices) do not duplicate it.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_ ? symbols_->size() : 0; }
  const std::string& symbol(Letter a) const { return (*symbols_)[a]; }
  const std::vector<std::string>& symbols() const;

  std::optional<Letter> find(std::string_view symbol) const;
  // Throws InputError on an unknown symbol.
  Letter at(std::string_view symbol) const;

  bool contains(Letter a) const { return a < size(); }
  bool contains(std::span<const Letter> w) const;

  // True when every symbol is a single character, so words print without separators.
  bool compact() const { return compact_; }

  // Splits a space-free token into letters by longest symbol match.
  // The token "eps" denotes the empty word.
  Word parse_word(std::string_view token) const;
  // Concatenation for compact alphabets, '.'-separated symbols otherwise.
  // The empty word formats as "".
  std::string format(std::span<const Letter> w) const;

  friend bool operator==(const Alphabet& lhs, const Alphabet& rhs);

 private:
  std::shared_ptr<const std::vector<std::string>> symbols_;
  bool compact_ = true;
};

}  // namespace omegasub
