#include "powerfree/morphisms.hpp"

#include <algorithm>
#include <optional>

#include "powerfree/text.hpp"

namespace powerfree {

Morphism::Morphism(std::vector<Word> images, std::size_t target_alphabet)
    : images_(std::move(images)), target_(target_alphabet) {
  if (images_.empty()) throw WordError("morphism needs at least one image");
  for (auto& img : images_) {
    for (Symbol s : img) {
      if (s >= target_) {
        throw WordError("morphism image symbol " + std::to_string(s) +
                        " outside target alphabet of size " + std::to_string(target_));
      }
    }
    img = img.with_alphabet(target_);
  }
}

Morphism Morphism::parse(std::string_view text) {
  std::vector<std::optional<Word>> rules;
  std::size_t target = 2;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto rule = text.substr(start, comma == text.npos ? text.npos : comma - start);
    const auto arrow = rule.find("->");
    if (arrow == rule.npos) throw ParseError("morphism rule without '->': '" + std::string(rule) + "'");
    const Word lhs = parse_word(rule.substr(0, arrow));
    if (lhs.size() != 1) throw ParseError("morphism rule must map a single symbol: '" + std::string(rule) + "'");
    Word rhs = parse_word(rule.substr(arrow + 2));
    target = std::max(target, rhs.alphabet_size());
    if (rules.size() <= lhs[0]) rules.resize(lhs[0] + 1);
    if (rules[lhs[0]]) throw ParseError("duplicate rule for symbol " + std::to_string(lhs[0]));
    rules[lhs[0]] = std::move(rhs);
    if (comma == text.npos) break;
    start = comma + 1;
  }
  std::vector<Word> images;
  for (std::size_t a = 0; a < rules.size(); ++a) {
    if (!rules[a]) throw ParseError("no image given for symbol " + std::to_string(a));
    images.push_back(*rules[a]);
  }
  target = std::max(target, images.size());
  return Morphism(std::move(images), target);
}

const Morphism& Morphism::thue_morse() {
  static const Morphism mu({Word({0, 1}, 2), Word({1, 0}, 2)}, 2);
  return mu;
}

const Word& Morphism::image(Symbol a) const {
  if (a >= images_.size()) throw WordError("no image for symbol " + std::to_string(a));
  return images_[a];
}

Word Morphism::apply(const Word& w) const {
  Word out(target_);
  for (Symbol a : w) out.append(image(a));
  return out;
}

Word fixed_point_prefix(const Morphism& h, Symbol a, std::size_t length) {
  const Word& first = h.image(a);
  if (first.size() < 2 || first[0] != a) {
    throw WordError("morphism is not prolongable on symbol " + std::to_string(a));
  }
  Word current({a}, h.target_alphabet());
  while (current.size() < length) {
    Word next = h.apply(current);
    if (next.size() <= current.size()) {
      throw WordError("fixed point stops growing at length " + std::to_string(next.size()));
    }
    current = std::move(next);
  }
  return current.factor(0, length);
}

Word thue_morse_prefix(std::size_t length) {
  if (length == 0) return Word(2);
  return fixed_point_prefix(Morphism::thue_morse(), 0, length);
}

Word iterate(const Morphism& h, const Word& w, std::size_t times) {
  Word out = w;
  for (std::size_t i = 0; i < times; ++i) out = h.apply(out);
  return out;
}

}  // namespace powerfree
