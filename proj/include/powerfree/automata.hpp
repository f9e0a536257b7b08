#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powerfree/words.hpp"

namespace powerfree {

using StateId = std::uint32_t;

class DfaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Complete deterministic automaton with a dense transition table.
///
/// An optional dead state is a non-final sink; generated automata count it as
/// a state and keep it through serialization.
class Dfa {
 public:
  /// `table[q * alphabet + a]` is the successor of q on a. `finals` may be in
  /// any order and is stored sorted without duplicates.
  Dfa(std::size_t state_count, std::size_t alphabet_size, std::vector<StateId> table,
      StateId initial, std::vector<StateId> finals, std::optional<StateId> dead = std::nullopt);

  std::size_t state_count() const noexcept { return states_; }
  std::size_t alphabet_size() const noexcept { return alphabet_; }
  StateId initial() const noexcept { return initial_; }
  const std::vector<StateId>& finals() const noexcept { return finals_; }
  std::optional<StateId> dead() const noexcept { return dead_; }

  StateId next(StateId q, Symbol a) const { return table_[q * alphabet_ + a]; }
  bool is_final(StateId q) const noexcept { return final_mask_[q]; }

  /// State reached from `from` on `w`; throws on symbols outside the alphabet.
  StateId run(StateId from, std::span<const Symbol> w) const;

  /// States from which some final state is reachable.
  std::vector<bool> co_reachable() const;

  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ && a.table_ == b.table_ &&
           a.initial_ == b.initial_ && a.finals_ == b.finals_ && a.dead_ == b.dead_;
  }

 private:
  std::size_t states_;
  std::size_t alphabet_;
  std::vector<StateId> table_;
  StateId initial_;
  std::vector<StateId> finals_;
  std::vector<bool> final_mask_;
  std::optional<StateId> dead_;
};

bool accepts(const Dfa& d, const Word& w);

/// Minimum-length accepted word, lexicographically least among those.
std::optional<Word> shortest_accepted(const Dfa& d);

/// Reachable product automaton for L(d1) ∩ L(d2). Pairs with a dead component
/// collapse into a single dead state.
Dfa product_intersection(const Dfa& d1, const Dfa& d2);

/// Renumbers states in breadth-first order from the initial state (symbols in
/// increasing order), unreachable states after in their original order.
/// Two automata are isomorphic via an initial-preserving bijection of reachable
/// states iff their canonical forms agree on the reachable part.
Dfa canonicalize(const Dfa& d);

std::string to_json(const Dfa& d);
Dfa from_json(std::string_view text);

/// Subscript of a generated state, e.g. {2, 1, 0} for q_{2,1,0}.
struct StateLabel {
  std::vector<unsigned> subscript;

  std::string render() const;
  friend bool operator==(const StateLabel&, const StateLabel&) = default;
  /// (length, lexicographic) order.
  friend std::strong_ordering operator<=>(const StateLabel& a, const StateLabel& b) {
    if (auto c = a.subscript.size() <=> b.subscript.size(); c != 0) return c;
    return a.subscript <=> b.subscript;
  }
};

/// Labels per state id; the dead state has none.
using StateLabels = std::vector<std::optional<StateLabel>>;

struct DotOptions {
  bool show_dead = false;
};

std::string to_dot(const Dfa& d, const StateLabels* labels = nullptr, DotOptions options = {});

struct LabeledDfa {
  Dfa dfa;
  StateLabels labels;

  std::optional<StateId> find(const StateLabel& label) const;
};

/// The automaton D_i built from a simple k-power w1 of length n: 2^{i-1}(n-1)+2
/// states over Σ_{m+i-1} whose shortest k-power-free accepted word is
/// cyc_0(w_i). State ids follow label order; the dead state comes last.
LabeledDfa build_lower_bound_dfa(const Word& w1, unsigned k, std::size_t i);

}  // namespace powerfree
