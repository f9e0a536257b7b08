#include "powerfree/carpi.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "powerfree/morphisms.hpp"

namespace powerfree {

namespace {

const Morphism& mu() { return Morphism::thue_morse(); }

void require_carpi_word(const Word& w) {
  for (Symbol a : w) {
    if (a >= kCarpiAlphabet) {
      throw CarpiError("letter " + std::to_string(a) + " outside the 25-letter alphabet");
    }
  }
}

void require_binary_word(const Word& x) {
  for (Symbol b : x) {
    if (b > 1) throw CarpiError("binary word expected, found symbol " + std::to_string(b));
  }
}

bool starts_with(const Word& x, const Word& prefix) {
  return prefix.size() <= x.size() && std::equal(prefix.begin(), prefix.end(), x.begin());
}

bool ends_with(const Word& x, const Word& suffix) {
  return suffix.size() <= x.size() &&
         std::equal(suffix.begin(), suffix.end(), x.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

// y with μ(y) = x, if any.
std::optional<Word> unmu(const Word& x) {
  if (x.size() % 2 != 0) return std::nullopt;
  Word y(2);
  for (std::size_t i = 0; i < x.size(); i += 2) {
    if (x[i] == x[i + 1]) return std::nullopt;
    y.push_back(x[i]);
  }
  return y;
}

void invert_into(const Word& x, std::size_t max_len, Word& prefix, std::vector<Word>& out) {
  if (x.empty()) out.push_back(prefix);
  if (max_len == 0) return;
  for (unsigned code = 0; code < kCarpiAlphabet; ++code) {
    const auto letter = CarpiLetter::from_code(code);
    const Word& l = letter.left_word();
    const Word& r = letter.right_word();
    if (l.size() + r.size() > x.size() || !starts_with(x, l) || !ends_with(x, r)) continue;
    auto inner = unmu(x.factor(l.size(), x.size() - l.size() - r.size()));
    if (!inner) continue;
    prefix.push_back(code);
    invert_into(*inner, max_len - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::array<Word, 5>& carpi_blocks() {
  static const std::array<Word, 5> blocks{Word(2), Word({0}, 2), Word({1}, 2), Word({0, 0}, 2),
                                          Word({1, 1}, 2)};
  return blocks;
}

CarpiLetter CarpiLetter::from_code(unsigned code) {
  if (code >= kCarpiAlphabet) throw CarpiError("letter code " + std::to_string(code) + " outside 0..24");
  return {code, code / 5, code % 5};
}

CarpiLetter letter_of(unsigned left, unsigned right) {
  if (left >= 5 || right >= 5) throw CarpiError("block index outside 0..4");
  return {5 * left + right, left, right};
}

std::pair<Word, Word> decompose(unsigned code) {
  const auto letter = CarpiLetter::from_code(code);
  return {letter.left_word(), letter.right_word()};
}

Word phi(const Word& w) {
  require_carpi_word(w);
  Word image(2);
  for (std::size_t i = w.size(); i-- > 0;) {
    const auto letter = CarpiLetter::from_code(w[i]);
    image = letter.left_word() + mu().apply(image) + letter.right_word();
  }
  return image;
}

std::pair<Word, Word> phi_split(const Word& w) {
  require_carpi_word(w);
  Word first(2);
  std::vector<Word> right_parts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto letter = CarpiLetter::from_code(w[i]);
    first.append(iterate(mu(), letter.left_word(), i));
    right_parts.push_back(iterate(mu(), letter.right_word(), i));
  }
  Word second(2);
  for (auto it = right_parts.rbegin(); it != right_parts.rend(); ++it) second.append(*it);
  return {first, second};
}

std::vector<Word> invert_phi(const Word& x, std::size_t max_len) {
  require_binary_word(x);
  std::vector<Word> out;
  Word prefix(kCarpiAlphabet);
  invert_into(x.with_alphabet(2), max_len, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Endo identity_endo(std::size_t states) {
  Endo f(states);
  for (std::size_t q = 0; q < states; ++q) f[q] = static_cast<StateId>(q);
  return f;
}

Endo compose(const Endo& f, const Endo& g) {
  Endo h(g.size());
  for (std::size_t q = 0; q < g.size(); ++q) h[q] = f[g[q]];
  return h;
}

Endo eta_compose(const Dfa& d, const Word& x) {
  Endo f = identity_endo(d.state_count());
  for (Symbol b : x) {
    if (b >= d.alphabet_size()) {
      throw DfaError("symbol " + std::to_string(b) + " outside automaton alphabet");
    }
    for (auto& q : f) q = d.next(q, b);
  }
  return f;
}

Endo zeta_word(const Endo& zeta0, const Endo& zeta1, const Word& x) {
  Endo f = identity_endo(zeta0.size());
  for (Symbol b : x) f = compose(b == 0 ? zeta0 : zeta1, f);
  return f;
}

std::size_t FuncTupleHash::operator()(const FuncTuple& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Endo* f : {&t.kappa, &t.lambda, &t.zeta0, &t.zeta1}) {
    for (StateId q : *f) {
      h ^= q + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

FuncTuple initial_tuple(const Dfa& d) {
  const auto id = identity_endo(d.state_count());
  return {id, id, eta_compose(d, Word({0}, 2)), eta_compose(d, Word({1}, 2))};
}

FuncTuple step_tuple(const FuncTuple& t, const CarpiLetter& a) {
  return {compose(zeta_word(t.zeta0, t.zeta1, a.left_word()), t.kappa),
          compose(t.lambda, zeta_word(t.zeta0, t.zeta1, a.right_word())), compose(t.zeta1, t.zeta0),
          compose(t.zeta0, t.zeta1)};
}

bool tuple_accepts(const Dfa& d, const FuncTuple& t) {
  return d.is_final(t.lambda[t.kappa[d.initial()]]);
}

PsiDfa build_psi_dfa(const Dfa& d, std::size_t state_budget) {
  if (d.alphabet_size() != 2) throw CarpiError("Ψ construction needs a binary automaton");
  std::unordered_map<FuncTuple, StateId, FuncTupleHash> ids;
  std::vector<FuncTuple> tuples{initial_tuple(d)};
  ids.emplace(tuples.front(), 0);
  std::vector<StateId> table;
  for (std::size_t s = 0; s < tuples.size(); ++s) {
    for (unsigned code = 0; code < kCarpiAlphabet; ++code) {
      FuncTuple next = step_tuple(tuples[s], CarpiLetter::from_code(code));
      auto [it, fresh] = ids.try_emplace(next, static_cast<StateId>(tuples.size()));
      if (fresh) {
        if (tuples.size() >= state_budget) {
          throw CarpiError("Ψ automaton exceeds the state budget of " + std::to_string(state_budget));
        }
        tuples.push_back(std::move(next));
      }
      table.push_back(it->second);
    }
  }
  std::vector<StateId> finals;
  for (std::size_t s = 0; s < tuples.size(); ++s) {
    if (tuple_accepts(d, tuples[s])) finals.push_back(static_cast<StateId>(s));
  }
  return {Dfa(tuples.size(), kCarpiAlphabet, std::move(table), 0, std::move(finals)), std::move(tuples)};
}

std::size_t psi_state_bound(std::size_t n) {
  std::size_t bound = 1;
  for (std::size_t i = 0; i < 4 * n; ++i) {
    if (bound > std::numeric_limits<std::size_t>::max() / n) return std::numeric_limits<std::size_t>::max();
    bound *= n;
  }
  return bound;
}

std::optional<PsiWitness> shortest_overlap_free_via_psi(const Dfa& d, std::size_t max_len) {
  const PsiDfa psi = build_psi_dfa(d);
  const auto live = psi.dfa.co_reachable();
  const auto overlap = Constraint::overlap();

  struct Candidate {
    Word word;
    StateId state;
    Word first;   // Φ1(word)
    Word second;  // Φ2(word)
  };
  std::vector<Candidate> layer{{Word(kCarpiAlphabet), psi.dfa.initial(), Word(2), Word(2)}};
  for (std::size_t level = 0;; ++level) {
    for (const auto& c : layer) {
      if (!psi.dfa.is_final(c.state)) continue;
      Word image = c.first + c.second;
      if (is_free(image, overlap)) return PsiWitness{c.word, std::move(image)};
    }
    if (level == max_len) return std::nullopt;
    // Φ1(w) is a prefix and Φ2(w) a suffix of Φ of every extension of w.
    std::vector<Candidate> next;
    for (const auto& c : layer) {
      for (unsigned code = 0; code < kCarpiAlphabet; ++code) {
        const StateId t = psi.dfa.next(c.state, code);
        if (!live[t]) continue;
        const auto letter = CarpiLetter::from_code(code);
        Word first = c.first + iterate(mu(), letter.left_word(), level);
        if (!is_free(first, overlap)) continue;
        Word second = iterate(mu(), letter.right_word(), level) + c.second;
        if (!is_free(second, overlap)) continue;
        Word word = c.word;
        word.push_back(code);
        next.push_back({std::move(word), t, std::move(first), std::move(second)});
      }
    }
    if (next.empty()) return std::nullopt;
    layer = std::move(next);
  }
}

}  // namespace powerfree
