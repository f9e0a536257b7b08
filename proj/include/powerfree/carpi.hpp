#pragma once

// Carpi's coding of binary words by words over a 25-letter alphabet.
//
// Each letter a ∈ Σ25 stands for a pair (Φl(a), Φr(a)) ∈ H × H with
// H = [ε, 0, 1, 00, 11]; we fix code = 5·index(Φl) + index(Φr). The map
//
//   Φ(ε) = ε,   Φ(a w) = Φl(a) μ(Φ(w)) Φr(a)
//
// sends Σ25* to Σ2*, and Ψ(L) is the union of Φ-preimages of members of L.
// For a binary DFA D, build_psi_dfa constructs a DFA for Ψ(L(D)) whose states
// are quadruples of endofunctions on D's states.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "powerfree/automata.hpp"
#include "powerfree/words.hpp"

namespace powerfree {

inline constexpr std::size_t kCarpiAlphabet = 25;

class CarpiError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// H in its fixed order.
const std::array<Word, 5>& carpi_blocks();

struct CarpiLetter {
  unsigned code = 0;
  unsigned left = 0;   // index of Φl(a) in H
  unsigned right = 0;  // index of Φr(a) in H

  static CarpiLetter from_code(unsigned code);
  const Word& left_word() const { return carpi_blocks()[left]; }
  const Word& right_word() const { return carpi_blocks()[right]; }
};

CarpiLetter letter_of(unsigned left, unsigned right);
/// (Φl(a), Φr(a)).
std::pair<Word, Word> decompose(unsigned code);

Word phi(const Word& w);

/// (Φ1(w), Φ2(w)) with Φ1(w) = Φl(a0) μ(Φl(a1)) ... μ^{n-1}(Φl(a_{n-1})) and
/// Φ2(w) = μ^{n-1}(Φr(a_{n-1})) ... μ(Φr(a1)) Φr(a0); phi(w) = Φ1(w) Φ2(w).
std::pair<Word, Word> phi_split(const Word& w);

/// All w with |w| <= max_len and phi(w) = x, in lexicographic order.
std::vector<Word> invert_phi(const Word& x, std::size_t max_len);

/// A total function on a DFA's states, stored as its table of images.
using Endo = std::vector<StateId>;

Endo identity_endo(std::size_t states);
/// (f ∘ g)(q) = f(g(q)).
Endo compose(const Endo& f, const Endo& g);

/// η_x: the state map of reading x, leftmost symbol first; η_ε is the identity.
Endo eta_compose(const Dfa& d, const Word& x);

/// ζ_x = ζ_{b_{n-1}} ∘ ... ∘ ζ_{b_0} for a pair of symbol maps (ζ0, ζ1).
Endo zeta_word(const Endo& zeta0, const Endo& zeta1, const Word& x);

struct FuncTuple {
  Endo kappa;
  Endo lambda;
  Endo zeta0;
  Endo zeta1;

  friend bool operator==(const FuncTuple&, const FuncTuple&) = default;
};

struct FuncTupleHash {
  std::size_t operator()(const FuncTuple& t) const noexcept;
};

/// [ι, ι, η0, η1].
FuncTuple initial_tuple(const Dfa& d);
/// [ζ_{Φl(a)} ∘ κ, λ ∘ ζ_{Φr(a)}, ζ1 ∘ ζ0, ζ0 ∘ ζ1].
FuncTuple step_tuple(const FuncTuple& t, const CarpiLetter& a);
/// λ ∘ κ (q0) ∈ F.
bool tuple_accepts(const Dfa& d, const FuncTuple& t);

struct PsiDfa {
  Dfa dfa;
  /// tuples[q] is the quadruple represented by state q.
  std::vector<FuncTuple> tuples;
};

/// Reachable part of the functional-power automaton for Ψ(L(d)). Throws
/// CarpiError when d is not binary or more than `state_budget` states appear.
PsiDfa build_psi_dfa(const Dfa& d, std::size_t state_budget = 2'000'000);

/// N^{4N}, saturating at SIZE_MAX.
std::size_t psi_state_bound(std::size_t n);

struct PsiWitness {
  Word preimage;  // over Σ25
  Word image;     // phi(preimage), overlap-free and accepted by d
};

/// Searches Σ25 words by length (lexicographic within a length, up to
/// max_len) for a member of Ψ(L(d)) whose image is overlap-free.
std::optional<PsiWitness> shortest_overlap_free_via_psi(const Dfa& d, std::size_t max_len);

}  // namespace powerfree
