#pragma once

#include "omegasub/alphabet.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace omegasub {

/// Word homomorphism over a single alphabet, given by the image of every letter.
/// A substitution is a nonerasing homomorphism.
class Homomorphism {
 public:
  Homomorphism() = default;
  Homomorphism(Alphabet alphabet, std::vector<Word> images);

  static Homomorphism identity(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& image(Letter a) const { return images_[a]; }
  const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

struct NamedSubstitution {
  std::string name;
  Homomorphism map;
};

/// Eventually periodic directive sequence stem·cycle^ω; entries index a
/// substitution list.
struct DirectiveLasso {
  std::vector<std::size_t> stem;
  std::vector<std::size_t> cycle;

  // First `len` entries of stem·cycle^ω.
  std::vector<std::size_t> prefix(std::size_t len) const;
  friend bool operator==(const DirectiveLasso&, const DirectiveLasso&) = default;
};

// h(w): the images of the letters of w, concatenated.
Word substitute(const Homomorphism& h, std::span<const Letter> w);

// (sigma ∘ tau)(a) = sigma(tau(a)).
Homomorphism compose(const Homomorphism& sigma, const Homomorphism& tau);

// Composition of a sequence, first element outermost: s[0] ∘ s[1] ∘ ... .
Homomorphism compose_all(const Alphabet& alphabet, std::span<const Homomorphism> sequence);

bool is_nonerasing(const Homomorphism& h);

// Letters b that are proper prefixes of their own image.
std::vector<Letter> right_prolongable_letters(const Homomorphism& sigma);

// Letters b with sigma(b) = b.
std::vector<Letter> fixed_letters(const Homomorphism& sigma);

// Length-len prefix of lim sigma^n(b). Throws PreconditionError unless sigma is
// nonerasing and b right-prolongable.
Word generate_prefix(const Homomorphism& sigma, Letter b, std::size_t len);

// Letters whose iterated images eventually become empty.
std::vector<Letter> mortal_letters(const Homomorphism& sigma);

struct NonerasingReduction {
  Homomorphism substitution;   // over the surviving letters
  std::vector<Letter> kept;    // kept[i] = original letter of reduced letter i
};

// Repeatedly deletes letters with empty image from the alphabet and from all
// images. Returns nullopt ("unsupported") when a right-prolongable letter of the
// reduced substitution reaches a deleted letter in the iteration graph of sigma:
// the deleted letter then occurs in the generated word and deletion would change it.
// A nonerasing sigma is returned unchanged. Every letter being mortal is also
// unsupported, since no letter would remain.
std::optional<NonerasingReduction> nonerasing_reduction(const Homomorphism& sigma);

}  // namespace omegasub
