#pragma once

// Text forms of words.
//
//   symbol form:  "0110", "01[12]3"   digits for 0-9, [n] for larger symbols;
//                 a trailing "x<count>" repeats everything before it, so
//                 "01x3" is 010101. "" and "ε" denote the empty word.
//   code form:    "7,7,0"             comma-separated decimals (Σ25 words).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "powerfree/words.hpp"

namespace powerfree {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string render_word(const Word& w);

/// When `alphabet` is absent the word is declared over max(2, largest symbol + 1).
Word parse_word(std::string_view text, std::optional<std::size_t> alphabet = std::nullopt);

std::string render_codes(const Word& w);
Word parse_codes(std::string_view text, std::size_t alphabet);

}  // namespace powerfree
