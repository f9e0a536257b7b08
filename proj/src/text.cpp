#include "powerfree/text.hpp"

#include <algorithm>
#include <charconv>

namespace powerfree {

namespace {

std::size_t parse_count(std::string_view digits, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed number in '" + std::string(whole) + "'");
  }
  return value;
}

Word declare(std::vector<Symbol> symbols, std::optional<std::size_t> alphabet) {
  Symbol top = 0;
  for (Symbol s : symbols) top = std::max(top, s);
  const std::size_t fitted = std::max<std::size_t>(2, static_cast<std::size_t>(top) + 1);
  try {
    return Word(std::move(symbols), alphabet.value_or(fitted));
  } catch (const WordError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string render_word(const Word& w) {
  std::string out;
  for (Symbol s : w) {
    if (s < 10) {
      out.push_back(static_cast<char>('0' + s));
    } else {
      out += '[' + std::to_string(s) + ']';
    }
  }
  return out;
}

Word parse_word(std::string_view text, std::optional<std::size_t> alphabet) {
  if (text == "ε") return declare({}, alphabet);
  std::vector<Symbol> symbols;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      symbols.push_back(static_cast<Symbol>(c - '0'));
      ++i;
    } else if (c == '[') {
      const auto close = text.find(']', i);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated '[' in '" + std::string(text) + "'");
      }
      symbols.push_back(static_cast<Symbol>(parse_count(text.substr(i + 1, close - i - 1), text)));
      i = close + 1;
    } else if (c == 'x') {
      const std::size_t count = parse_count(text.substr(i + 1), text);
      std::vector<Symbol> repeated;
      repeated.reserve(symbols.size() * count);
      for (std::size_t r = 0; r < count; ++r) {
        repeated.insert(repeated.end(), symbols.begin(), symbols.end());
      }
      symbols = std::move(repeated);
      i = text.size();
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in '" +
                       std::string(text) + "'");
    }
  }
  return declare(std::move(symbols), alphabet);
}

std::string render_codes(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_codes(std::string_view text, std::size_t alphabet) {
  std::vector<Symbol> symbols;
  if (text.empty() || text == "ε") return declare({}, alphabet);
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    symbols.push_back(static_cast<Symbol>(parse_count(piece, text)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return declare(std::move(symbols), alphabet);
}

}  // namespace powerfree
