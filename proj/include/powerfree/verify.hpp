#pragma once

// Property suites that check the lemma, theorem and Φ statements by
// exhaustive or randomized enumeration. Each property reports how many
// instances it examined and how many counterexamples it met.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "powerfree/automata.hpp"
#include "powerfree/words.hpp"

namespace powerfree {

struct PropertyReport {
  explicit PropertyReport(std::string property = {}) : name(std::move(property)) {}

  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t counterexamples = 0;
  std::string first_counterexample;

  bool passed() const noexcept { return counterexamples == 0; }
  void record(bool holds, const std::string& instance);
};

/// "name instances=<n> counterexamples=<m>" plus the first counterexample, if any.
std::string format_report(const PropertyReport& r);

struct VerifyOptions {
  std::size_t max_len = 12;
  bool long_tests = false;
  std::uint64_t seed = 0x5eed;
};

std::vector<PropertyReport> verify_lemmas(const VerifyOptions& options);
std::vector<PropertyReport> verify_theorem7(const VerifyOptions& options);
std::vector<PropertyReport> verify_carpi(const VerifyOptions& options);

struct SimplePower {
  Word word;
  unsigned k;
};

/// Simple k-powers (k = 2, 3) of length <= max_length reachable from the base
/// constructions and the w_i family.
std::vector<SimplePower> simple_power_corpus(std::size_t max_length);

/// Uniformly random complete DFA; each state is final with probability 1/3.
Dfa random_dfa(std::mt19937_64& rng, std::size_t states, std::size_t alphabet);

struct GrowthRow {
  std::size_t i = 0;
  std::size_t states = 0;
  std::size_t witness_length = 0;         // |cyc_0(w_i)|
  std::optional<std::size_t> measured;    // shortest free accepted length, when searched
  double log_ratio = 0;                   // log|witness| / (log states)^2, base 2
};

/// State counts and shortest-word lengths of D_1..D_max_i; the exact search
/// runs for i <= search_up_to.
std::vector<GrowthRow> growth_table(const Word& w1, unsigned k, std::size_t max_i,
                                    std::size_t search_up_to);

}  // namespace powerfree
