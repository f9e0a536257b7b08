#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "powerfree/automata.hpp"
#include "powerfree/words.hpp"

namespace powerfree {

struct SearchOptions {
  std::size_t max_len = 0;
  /// Worker threads for frontier expansion; results do not depend on it.
  unsigned threads = 1;
  /// When set, one "level <n> frontier <size>" line per level.
  std::ostream* progress = nullptr;
};

struct SearchResult {
  enum class Outcome {
    found,
    /// Every constraint-free accepted candidate died out: no such word exists.
    none_exists,
    /// Nothing up to max_len; longer words were not examined.
    none_within_bound,
  };

  Outcome outcome = Outcome::none_within_bound;
  std::optional<Word> word;
  std::uint64_t explored = 0;
  std::size_t widest_level = 0;
};

/// Shortest word that is accepted by `d` and free of the repetitions
/// forbidden by `c`, lexicographically least among the shortest.
///
/// Nodes are whole words (with their DFA state), expanded level by level in
/// lexicographic order. Extensions into states that cannot reach a final
/// state are pruned; no two distinct words are merged.
SearchResult shortest_free_accepted(const Dfa& d, const Constraint& c, const SearchOptions& options);

/// Number of constraint-free words of exactly `length` over Σ_alphabet.
std::uint64_t count_free(std::size_t alphabet, const Constraint& c, std::size_t length);

/// The constraint-free words of exactly `length`, in lexicographic order.
std::vector<Word> enumerate_free(std::size_t alphabet, const Constraint& c, std::size_t length);

}  // namespace powerfree
