#include "powerfree/constructions.hpp"

#include <algorithm>

#include "powerfree/morphisms.hpp"

namespace powerfree {

namespace {

// Squares of half-length <= n/2 in w·w[0..n-2] are exactly the squares that
// occur in some rotation of w.
bool circular_squarefree_closure(const std::vector<Symbol>& w) {
  const std::size_t n = w.size();
  std::vector<Symbol> doubled(w);
  doubled.insert(doubled.end(), w.begin(), w.end() - 1);
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < doubled.size(); ++j) {
      run = doubled[j] == doubled[j + p] ? run + 1 : 0;
      if (run >= p) return false;
    }
  }
  return true;
}

bool extend_circular(std::vector<Symbol>& prefix, std::size_t n) {
  if (prefix.size() == n) return circular_squarefree_closure(prefix);
  const auto square = Constraint::kpower(2);
  for (Symbol a = 0; a < 3; ++a) {
    prefix.push_back(a);
    if (!has_forbidden_suffix(prefix, square) && extend_circular(prefix, n)) return true;
    prefix.pop_back();
  }
  return false;
}

void require_base(const Word& w1, unsigned k) {
  if (k < 2) throw WordError("exponent k must be at least 2");
  const std::size_t m = base_alphabet(k);
  for (Symbol s : w1) {
    if (s >= m) {
      throw WordError("base word must be over an alphabet of size " + std::to_string(m));
    }
  }
  if (!is_simple_kpower(w1, k)) {
    throw WordError("base word is not a simple " + std::to_string(k) + "-power");
  }
}

// One growth step: blocks cyc_{j*shift}(w) followed by `separator`, j = 0..n-1.
Word grow(const Word& w, std::size_t n, std::size_t shift, const Word& separator,
          std::size_t alphabet) {
  Word out(alphabet);
  for (std::size_t j = 0; j < n; ++j) {
    out.append(cyc(w, j * shift));
    out.append(separator);
  }
  return out.with_alphabet(alphabet);
}

}  // namespace

std::size_t base_alphabet(unsigned k) { return k == 2 ? 3 : 2; }

std::optional<Word> find_circularly_squarefree(std::size_t n) {
  if (n == 0) throw WordError("circularly square-free words need positive length");
  std::vector<Symbol> prefix;
  prefix.reserve(n);
  if (!extend_circular(prefix, n)) return std::nullopt;
  return Word(std::move(prefix), 3);
}

Word base_simple_power(unsigned k, std::size_t size_param) {
  if (k < 2) throw WordError("exponent k must be at least 2");
  if (k == 2) {
    if (size_param == 0) throw WordError("square root length must be positive");
    auto p = find_circularly_squarefree(size_param);
    if (!p) {
      throw WordError("no circularly square-free ternary word of length " +
                      std::to_string(size_param));
    }
    return p->power(2);
  }
  if (size_param >= 32) throw WordError("Thue-Morse root exponent too large");
  return thue_morse_prefix(std::size_t{1} << size_param).power(k);
}

Word build_w(const Word& w1, unsigned k, std::size_t i) {
  if (i == 0) throw WordError("family index starts at 1");
  require_base(w1, k);
  const std::size_t m = base_alphabet(k);
  const std::size_t n = w1.size();
  Word w = w1.with_alphabet(m);
  std::size_t shift = 1;  // n^{level-1}
  for (std::size_t level = 1; level < i; ++level) {
    const std::size_t alphabet = m + level;
    const Word separator({static_cast<Symbol>(m + level - 1)}, alphabet);
    w = grow(w, n, shift, separator, alphabet);
    shift *= n;
  }
  return w;
}

std::vector<Word> separator_cores(unsigned k, std::size_t count) {
  const std::size_t m = base_alphabet(k);
  const auto constraint = Constraint::kpower(k);
  std::vector<Word> cores;
  std::vector<Word> layer{Word(m)};
  while (cores.size() < count && !layer.empty()) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (Symbol a = 0; a < m; ++a) {
        if (!is_free_extension(w, true, a, constraint)) continue;
        Word e = w;
        e.push_back(a);
        next.push_back(e);
      }
    }
    for (const auto& w : next) {
      if (cores.size() == count) break;
      cores.push_back(w);
    }
    layer = std::move(next);
  }
  if (cores.size() < count) throw WordError("ran out of k-power-free separator cores");
  return cores;
}

Word build_w_prime(const Word& w1, unsigned k, std::size_t i) {
  if (i == 0) throw WordError("family index starts at 1");
  require_base(w1, k);
  const std::size_t m = base_alphabet(k);
  const std::size_t n = w1.size();
  const auto cores = separator_cores(k, i - 1);
  const Word mark({static_cast<Symbol>(m)}, m + 1);
  Word w = w1.with_alphabet(m + 1);
  std::size_t shift = 1;
  for (std::size_t level = 1; level < i; ++level) {
    const Word separator = mark + cores[level - 1].with_alphabet(m + 1) + mark;
    // Shifts stay n^{level-1} even though |w'_level| exceeds n^level for level >= 2.
    w = grow(w, n, shift, separator, m + 1);
    shift *= n;
  }
  return w;
}

Word simple_overlap_from_square(const Word& s) {
  if (!is_simple_kpower(s, 2)) throw WordError("input is not a simple square");
  Word out = s;
  out.push_back(s[0]);
  return out;
}

}  // namespace powerfree
