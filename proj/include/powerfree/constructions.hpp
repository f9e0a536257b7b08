#pragma once

// Builders for long simple k-powers.
//
// Starting from a simple k-power w1 of length n over Σ_m (m = 2 for k >= 3,
// m = 3 for k = 2) the family
//
//   w_{i+1} = cyc_0(w_i) a_i cyc_{n^{i-1}}(w_i) a_i ... cyc_{(n-1)n^{i-1}}(w_i) a_i,
//   a_i = m + i - 1,
//
// consists of simple k-powers of length n^i over Σ_{m+i-1}. The fixed-alphabet
// variant replaces the fresh letter a_i by a separator b_i = m c_i m.

#include <cstddef>
#include <optional>
#include <vector>

#include "powerfree/words.hpp"

namespace powerfree {

/// Alphabet size of base words: 3 for squares, 2 otherwise.
std::size_t base_alphabet(unsigned k);

/// Lexicographically least ternary word of length n whose rotations are all
/// square-free, or nullopt when none exists.
std::optional<Word> find_circularly_squarefree(std::size_t n);

/// w1 = p^k. For k >= 3, p = t[0..2^size_param - 1]; for k = 2, p is the least
/// circularly square-free ternary word of length size_param.
Word base_simple_power(unsigned k, std::size_t size_param);

/// w_i grown from w1. Throws WordError when w1 is not a simple k-power over Σ_m.
Word build_w(const Word& w1, unsigned k, std::size_t i);

/// The separator cores c_1, c_2, ...: shortest nonempty k-power-free words over
/// Σ_m in (length, lexicographic) order.
std::vector<Word> separator_cores(unsigned k, std::size_t count);

/// w'_i over the fixed alphabet Σ_{m+1}.
Word build_w_prime(const Word& w1, unsigned k, std::size_t i);

/// s·s[0] for a simple square s.
Word simple_overlap_from_square(const Word& s);

}  // namespace powerfree
