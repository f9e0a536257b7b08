#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "powerfree/words.hpp"

namespace powerfree {

/// A substitution Σ_source* -> Σ_target*, given by one image per source symbol.
class Morphism {
 public:
  Morphism(std::vector<Word> images, std::size_t target_alphabet);

  /// Parses "0->01,1->10"; the source alphabet is the number of rules, which
  /// must cover 0..n-1 in some order.
  static Morphism parse(std::string_view text);

  /// The Thue-Morse morphism 0 -> 01, 1 -> 10.
  static const Morphism& thue_morse();

  std::size_t source_alphabet() const noexcept { return images_.size(); }
  std::size_t target_alphabet() const noexcept { return target_; }
  const Word& image(Symbol a) const;

  Word apply(const Word& w) const;

 private:
  std::vector<Word> images_;
  std::size_t target_;
};

/// First `length` symbols of h^ω(a). Requires h(a) = a·x with x nonempty.
Word fixed_point_prefix(const Morphism& h, Symbol a, std::size_t length);

/// t[0..length-1] for the Thue-Morse word t.
Word thue_morse_prefix(std::size_t length);

/// μ^n applied to `w`.
Word iterate(const Morphism& h, const Word& w, std::size_t times);

}  // namespace powerfree
