#pragma once

// Finite words over small integer alphabets and the repetition predicates
// used throughout the library: partial conjugates, primitivity, k-power and
// overlap detection, simple k-powers and circular squarefreeness.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace powerfree {

using Symbol = std::uint32_t;

/// Thrown for violated preconditions on words and their symbols.
class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite sequence of symbols, each below `alphabet_size()`.
///
/// The alphabet size is a declared upper bound on the symbols, not part of a
/// word's identity: equality and ordering look at the symbols only, and
/// ordering is lexicographic (a proper prefix sorts first).
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t alphabet_size);
  Word(std::vector<Symbol> symbols, std::size_t alphabet_size);
  Word(std::initializer_list<Symbol> symbols, std::size_t alphabet_size);

  /// Smallest alphabet that holds every symbol (at least 1).
  static Word fit(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::size_t alphabet_size() const noexcept { return alphabet_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol back() const { return symbols_.back(); }

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  void push_back(Symbol s);
  void pop_back() { symbols_.pop_back(); }
  void append(const Word& other);

  /// w[start .. start+length-1], clamped to the end of the word.
  Word factor(std::size_t start, std::size_t length) const;
  /// Same symbols over a (possibly larger) declared alphabet.
  Word with_alphabet(std::size_t alphabet_size) const;
  /// The word repeated `k` times.
  Word power(std::size_t k) const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::size_t alphabet_ = 1;
};

/// Concatenation over the larger of the two alphabets.
Word operator+(const Word& a, const Word& b);

/// Repetition-avoidance constraint: no k-power factor, or no overlap factor.
struct Constraint {
  enum class Kind { kpower, overlap };

  Kind kind = Kind::kpower;
  unsigned k = 2;

  static Constraint kpower(unsigned k);
  static Constraint overlap() { return {Kind::overlap, 0}; }

  std::string describe() const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// A located repetition. For k-powers the factor is w[start .. start+period*k-1];
/// for overlaps it is w[start .. start+2*period] (shape axaxa with |ax| = period).
struct Occurrence {
  std::size_t start = 0;
  std::size_t period = 0;
  Constraint::Kind kind = Constraint::Kind::kpower;
  unsigned exponent = 0;  // k for k-powers, 0 for overlaps

  std::size_t length() const noexcept {
    return kind == Constraint::Kind::kpower ? period * exponent : 2 * period + 1;
  }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Cyclic rotation to the left by `i` (mod |w|).
Word rotate(const Word& w, std::size_t i);

/// Partial conjugate: w[i..n-1] w[0..i-2] for i >= 1, w[0..n-2] for i = 0.
/// `i == |w|` is accepted and evaluated literally (it yields w[0..n-2]).
Word cyc(const Word& w, std::size_t i);

bool is_primitive(const Word& w);
std::set<Word> distinct_conjugates(const Word& w);

/// First k-power factor, smallest start then smallest period.
std::optional<Occurrence> find_kpower(const Word& w, unsigned k);
/// First overlap factor, smallest start then smallest period.
std::optional<Occurrence> find_overlap(const Word& w);
std::optional<Occurrence> find_repetition(const Word& w, const Constraint& c);

bool is_free(const Word& w, const Constraint& c);

/// True iff some repetition forbidden by `c` is a suffix of `w`.
/// For a word whose proper prefixes are all free this decides freeness of w.
bool has_forbidden_suffix(std::span<const Symbol> w, const Constraint& c);

/// Whether w·a satisfies `c`. With `known_free` only repetitions ending at the
/// new last position are examined; otherwise w·a is checked from scratch.
bool is_free_extension(const Word& w, bool known_free, Symbol a, const Constraint& c);

/// w = p^k for p = w[0..|w|/k-1] and no proper factor of w is a k-power.
bool is_simple_kpower(const Word& w, unsigned k);

/// Every cyclic rotation of w is square-free.
bool is_circularly_squarefree(const Word& w);

}  // namespace powerfree
