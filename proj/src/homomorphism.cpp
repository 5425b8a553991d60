#include "omegasub/homomorphism.hpp"

#include "omegasub/errors.hpp"

#include <algorithm>

namespace omegasub {

Homomorphism::Homomorphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size()) throw InputError("homomorphism needs exactly one image per letter");
  for (const auto& image : images_)
    if (!alphabet_.contains(image)) throw InputError("image contains a letter outside the alphabet");
}

Homomorphism Homomorphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (Letter a = 0; a < alphabet.size(); ++a) images.push_back({a});
  return Homomorphism(alphabet, std::move(images));
}

std::vector<std::size_t> DirectiveLasso::prefix(std::size_t len) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < len && i < stem.size(); ++i) out.push_back(stem[i]);
  while (out.size() < len && !cycle.empty()) out.push_back(cycle[(out.size() - stem.size()) % cycle.size()]);
  return out;
}

Word substitute(const Homomorphism& h, std::span<const Letter> w) {
  if (!h.alphabet().contains(w)) throw InputError("word contains a letter outside the alphabet");
  Word out;
  for (Letter a : w) out.insert(out.end(), h.image(a).begin(), h.image(a).end());
  return out;
}

Homomorphism compose(const Homomorphism& sigma, const Homomorphism& tau) {
  if (!(sigma.alphabet() == tau.alphabet())) throw InputError("cannot compose homomorphisms over different alphabets");
  std::vector<Word> images;
  images.reserve(tau.alphabet().size());
  for (Letter a = 0; a < tau.alphabet().size(); ++a) images.push_back(substitute(sigma, tau.image(a)));
  return Homomorphism(sigma.alphabet(), std::move(images));
}

Homomorphism compose_all(const Alphabet& alphabet, std::span<const Homomorphism> sequence) {
  Homomorphism result = Homomorphism::identity(alphabet);
  for (const auto& h : sequence) result = compose(result, h);
  return result;
}

bool is_nonerasing(const Homomorphism& h) {
  return std::none_of(h.images().begin(), h.images().end(), [](const Word& w) { return w.empty(); });
}

std::vector<Letter> right_prolongable_letters(const Homomorphism& sigma) {
  std::vector<Letter> out;
  for (Letter b = 0; b < sigma.alphabet().size(); ++b) {
    const Word& image = sigma.image(b);
    if (image.size() > 1 && image.front() == b) out.push_back(b);
  }
  return out;
}

std::vector<Letter> fixed_letters(const Homomorphism& sigma) {
  std::vector<Letter> out;
  for (Letter b = 0; b < sigma.alphabet().size(); ++b)
    if (sigma.image(b) == Word{b}) out.push_back(b);
  return out;
}

Word generate_prefix(const Homomorphism& sigma, Letter b, std::size_t len) {
  if (!is_nonerasing(sigma)) throw PreconditionError("generate_prefix needs a nonerasing substitution");
  const auto rp = right_prolongable_letters(sigma);
  if (std::find(rp.begin(), rp.end(), b) == rp.end())
    throw PreconditionError("letter '" + sigma.alphabet().symbol(b) + "' is not right-prolongable");
  // Every iterate is a prefix of the next, so truncating between steps is safe.
  Word w{b};
  while (w.size() < len) {
    w = substitute(sigma, w);
    if (w.size() > len) w.resize(len);
  }
  w.resize(len);
  return w;
}

std::vector<Letter> mortal_letters(const Homomorphism& sigma) {
  const std::size_t n = sigma.alphabet().size();
  std::vector<bool> mortal(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (Letter a = 0; a < n; ++a) {
      if (mortal[a]) continue;
      const Word& image = sigma.image(a);
      if (std::all_of(image.begin(), image.end(), [&](Letter c) { return mortal[c]; })) {
        mortal[a] = true;
        changed = true;
      }
    }
  }
  std::vector<Letter> out;
  for (Letter a = 0; a < n; ++a)
    if (mortal[a]) out.push_back(a);
  return out;
}

std::optional<NonerasingReduction> nonerasing_reduction(const Homomorphism& sigma) {
  const std::size_t n = sigma.alphabet().size();
  if (is_nonerasing(sigma)) {
    std::vector<Letter> kept(n);
    for (Letter a = 0; a < n; ++a) kept[a] = a;
    return NonerasingReduction{sigma, std::move(kept)};
  }

  const auto deleted = mortal_letters(sigma);
  std::vector<bool> is_deleted(n, false);
  for (Letter a : deleted) is_deleted[a] = true;
  if (deleted.size() == n) return std::nullopt;

  std::vector<Letter> kept;
  std::vector<Letter> renumber(n, 0);
  std::vector<std::string> symbols;
  for (Letter a = 0; a < n; ++a) {
    if (is_deleted[a]) continue;
    renumber[a] = static_cast<Letter>(kept.size());
    kept.push_back(a);
    symbols.push_back(sigma.alphabet().symbol(a));
  }
  std::vector<Word> images;
  for (Letter a : kept) {
    Word image;
    for (Letter c : sigma.image(a))
      if (!is_deleted[c]) image.push_back(renumber[c]);
    images.push_back(std::move(image));
  }
  NonerasingReduction reduction{Homomorphism(Alphabet(std::move(symbols)), std::move(images)), kept};

  // A generating letter of the reduced substitution must not see a deleted
  // letter in sigma's iteration graph (a -> every letter of sigma(a)).
  for (Letter rb : right_prolongable_letters(reduction.substitution)) {
    std::vector<bool> seen(n, false);
    std::vector<Letter> todo{kept[rb]};
    seen[kept[rb]] = true;
    while (!todo.empty()) {
      const Letter a = todo.back();
      todo.pop_back();
      if (is_deleted[a]) return std::nullopt;
      for (Letter c : sigma.image(a))
        if (!seen[c]) {
          seen[c] = true;
          todo.push_back(c);
        }
    }
  }
  return reduction;
}

}  // namespace omegasub
