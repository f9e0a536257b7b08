#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "powerfree/automata.hpp"
#include "powerfree/constructions.hpp"
#include "powerfree/text.hpp"
#include "powerfree/verify.hpp"

using namespace powerfree;

namespace {

Word w(const char* text) { return parse_word(text); }

Dfa universal(std::size_t alphabet) { return Dfa(1, alphabet, std::vector<StateId>(alphabet, 0), 0, {0}); }
Dfa empty_language(std::size_t alphabet) { return Dfa(1, alphabet, std::vector<StateId>(alphabet, 0), 0, {}); }

// Accepts exactly `word` over Σ_alphabet, with a trailing dead state.
Dfa exactly(const Word& word, std::size_t alphabet) {
  const std::size_t n = word.size();
  const auto dead = static_cast<StateId>(n + 1);
  std::vector<StateId> table((n + 2) * alphabet, dead);
  for (std::size_t q = 0; q < n; ++q) table[q * alphabet + word[q]] = static_cast<StateId>(q + 1);
  return Dfa(n + 2, alphabet, std::move(table), 0, {static_cast<StateId>(n)}, dead);
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("construction validates the automaton") {
  CHECK_THROWS_AS(Dfa(0, 2, {}, 0, {}), DfaError);
  CHECK_THROWS_AS(Dfa(1, 2, {0}, 0, {}), DfaError);
  CHECK_THROWS_AS(Dfa(1, 1, {1}, 0, {}), DfaError);
  CHECK_THROWS_AS(Dfa(1, 1, {0}, 1, {}), DfaError);
  CHECK_THROWS_AS(Dfa(1, 1, {0}, 0, {1}), DfaError);
  CHECK_THROWS_AS(Dfa(2, 1, {1, 1}, 0, {1}, 1), DfaError);
  CHECK_THROWS_AS(Dfa(2, 1, {1, 0}, 0, {}, 1), DfaError);
  const Dfa d(2, 1, {1, 1}, 0, {1, 1, 0});
  CHECK(d.finals() == std::vector<StateId>{0, 1});
}

TEST_CASE("acceptance") {
  const auto d1 = build_lower_bound_dfa(w("01x3"), 3, 1);
  CHECK(accepts(d1.dfa, w("01010")));
  CHECK_FALSE(accepts(d1.dfa, w("0101")));
  CHECK_FALSE(accepts(d1.dfa, Word(2)));
  CHECK_FALSE(accepts(d1.dfa, w("010101")));
  CHECK_THROWS_AS(accepts(d1.dfa, w("012")), DfaError);
}

TEST_CASE("shortest accepted word") {
  const auto d1 = build_lower_bound_dfa(w("01x3"), 3, 1);
  CHECK(shortest_accepted(d1.dfa) == w("01010"));
  CHECK(shortest_accepted(universal(2)) == Word(2));
  CHECK_FALSE(shortest_accepted(empty_language(2)));
  CHECK(shortest_accepted(exactly(w("0110"), 2)) == w("0110"));
  // two words of length 2 accepted; the smaller one is returned
  const Dfa two(4, 2, {1, 1, 3, 2, 2, 2, 3, 3}, 0, {2});
  CHECK(shortest_accepted(two) == w("01"));
}

TEST_CASE("shortest accepted words are shorter than the state count") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Dfa d = random_dfa(rng, 1 + rng() % 8, 2 + rng() % 2);
    const auto found = shortest_accepted(d);
    // brute force over all words shorter than the state count
    std::optional<oracle::Symbols> expected;
    for (std::size_t len = 0; len < d.state_count() && !expected; ++len) {
      for (const auto& s : oracle::all_words(static_cast<unsigned>(d.alphabet_size()), len)) {
        if (oracle::runs_to_final(d, s)) {
          expected = s;
          break;
        }
      }
    }
    REQUIRE(found.has_value() == expected.has_value());
    if (found) {
      CHECK(found->size() < d.state_count());
      CHECK(oracle::of(*found) == *expected);
    }
  }
}

TEST_CASE("product intersection") {
  const auto d1 = build_lower_bound_dfa(w("01x3"), 3, 1).dfa;
  const Dfa same = product_intersection(universal(2), d1);
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& s : oracle::all_words(2, len)) {
      CHECK(accepts(same, oracle::word(s, 2)) == accepts(d1, oracle::word(s, 2)));
    }
  }
  CHECK(product_intersection(empty_language(2), d1).finals().empty());
  const Dfa self = product_intersection(d1, d1);
  CHECK(self.state_count() <= d1.state_count() * d1.state_count());
  CHECK(shortest_accepted(self) == w("01010"));
  for (std::size_t len = 0; len <= 7; ++len) {
    for (const auto& s : oracle::all_words(2, len)) {
      CHECK(accepts(self, oracle::word(s, 2)) == (oracle::word(s, 2) == w("01010")));
    }
  }
  CHECK_THROWS_AS(product_intersection(universal(2), universal(3)), DfaError);
}

TEST_CASE("product intersection matches pairwise simulation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Dfa a = random_dfa(rng, 1 + rng() % 5, 2);
    const Dfa b = random_dfa(rng, 1 + rng() % 5, 2);
    const Dfa p = product_intersection(a, b);
    CHECK(p.state_count() <= a.state_count() * b.state_count());
    for (std::size_t len = 0; len <= 6; ++len) {
      for (const auto& s : oracle::all_words(2, len)) {
        REQUIRE(oracle::runs_to_final(p, s) == (oracle::runs_to_final(a, s) && oracle::runs_to_final(b, s)));
      }
    }
  }
}

TEST_CASE("JSON form") {
  const auto d1 = build_lower_bound_dfa(w("01x3"), 3, 1).dfa;
  CHECK(to_json(d1) ==
        "{\"alphabet\":2,\"states\":7,\"initial\":0,\"finals\":[5],\"dead\":6,"
        "\"transitions\":[[1,6],[6,2],[3,6],[6,4],[5,6],[6,6],[6,6]]}\n");
  CHECK(from_json(to_json(d1)) == d1);
  CHECK(to_json(universal(2)) ==
        "{\"alphabet\":2,\"states\":1,\"initial\":0,\"finals\":[0],\"dead\":null,\"transitions\":[[0,0]]}\n");
}

TEST_CASE("JSON round trip is identity up to canonical numbering") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Dfa d = random_dfa(rng, 1 + rng() % 10, 1 + rng() % 4);
    CHECK(canonicalize(from_json(to_json(d))) == canonicalize(d));
  }
  for (std::size_t i = 1; i <= 4; ++i) {
    const auto d = build_lower_bound_dfa(w("01x3"), 3, i).dfa;
    CHECK(from_json(to_json(d)) == d);
  }
}

TEST_CASE("malformed JSON documents") {
  const std::string ok = R"({"alphabet":1,"states":2,"initial":0,"finals":[1],"dead":null,"transitions":[[1],[1]]})";
  CHECK_NOTHROW(from_json(ok));
  CHECK_THROWS_WITH_AS(from_json(R"({"alphabet":1,"states":1,"finals":[],"dead":null,"transitions":[[0]]})"),
                       "missing field \"initial\"", DfaError);
  CHECK_THROWS_AS(from_json(R"({"alphabet":1,"states":2,"initial":0,"finals":[1],"dead":null,"transitions":[[2],[1]]})"),
                  DfaError);
  CHECK_THROWS_AS(from_json(R"({"alphabet":1,"states":2,"initial":0,"finals":[1],"dead":null,"transitions":[[1]]})"),
                  DfaError);
  CHECK_THROWS_AS(from_json(R"({"alphabet":2,"states":1,"initial":0,"finals":[],"dead":null,"transitions":[[0]]})"),
                  DfaError);
  CHECK_THROWS_AS(from_json(R"({"alphabet":1,"states":1,"initial":0,"finals":[3],"dead":null,"transitions":[[0]]})"),
                  DfaError);
  CHECK_THROWS_AS(from_json(R"({"alphabet":1,"states":1,"initial":-1,"finals":[],"dead":null,"transitions":[[0]]})"),
                  DfaError);
  CHECK_THROWS_AS(from_json("[1,2]"), DfaError);
  CHECK_THROWS_AS(from_json("{\"alphabet\":"), DfaError);
}

TEST_CASE("canonical numbering") {
  // same automaton with states 1 and 2 swapped
  const Dfa a(3, 2, {1, 2, 1, 1, 2, 2}, 0, {2});
  const Dfa b(3, 2, {2, 1, 1, 1, 2, 2}, 0, {1});
  CHECK_FALSE(a == b);
  CHECK(canonicalize(a) == canonicalize(b));
  CHECK(canonicalize(canonicalize(a)) == canonicalize(a));
}

TEST_CASE("state labels") {
  CHECK(StateLabel{{1, 0}}.render() == "q_{1,0}");
  CHECK(StateLabel{{2, 1, 4}}.render() == "q_{2,1,4}");
  CHECK(StateLabel{{1, 5}} < StateLabel{{2, 1, 0}});
  CHECK(StateLabel{{1, 2}} < StateLabel{{1, 3}});
  CHECK(StateLabel{{2, 1}} < StateLabel{{1, 0, 0}});
}

TEST_CASE("DOT output") {
  const auto d1 = build_lower_bound_dfa(w("01x3"), 3, 1);
  const std::string dot = to_dot(d1.dfa, &d1.labels);
  CHECK(dot.rfind("digraph {\n  rankdir=LR;\n", 0) == 0);
  CHECK(dot.back() == '\n');
  CHECK(count(dot, "shape=") == 6);
  CHECK(count(dot, "shape=doublecircle") == 1);
  CHECK(count(dot, "->") == 5);
  const std::string with_dead = to_dot(d1.dfa, &d1.labels, {.show_dead = true});
  CHECK(count(with_dead, "shape=") == 7);
  CHECK(count(to_dot(empty_language(2)), "shape=") == 1);
  CHECK(count(to_dot(empty_language(2)), "doublecircle") == 0);

  const auto d2 = build_lower_bound_dfa(w("01x3"), 3, 2);
  const std::string named = to_dot(d2.dfa, &d2.labels);
  CHECK(named.find("\"q_{1,0}\"") != std::string::npos);
  CHECK(named.find("\"q_{2,1,4}\" [shape=doublecircle]") != std::string::npos);
  CHECK(named.find("q_{2,1,5}") == std::string::npos);
}

TEST_CASE("D_1 spells cyc_0(w_1) into its final state") {
  const auto d1 = build_lower_bound_dfa(w("01x3"), 3, 1);
  CHECK(d1.dfa.state_count() == 7);
  CHECK(d1.dfa.finals() == std::vector<StateId>{*d1.find(StateLabel{{1, 5}})});
  CHECK(d1.dfa.dead() == StateId{6});
  StateId q = d1.dfa.initial();
  const Word spell = w("01010");
  for (std::size_t j = 0; j < spell.size(); ++j) {
    CHECK(q == *d1.find(StateLabel{{1, static_cast<unsigned>(j)}}));
    q = d1.dfa.next(q, spell[j]);
  }
  CHECK(d1.dfa.is_final(q));
}

TEST_CASE("D_2 transitions") {
  const auto d2 = build_lower_bound_dfa(w("01x3"), 3, 2);
  CHECK(to_json(d2.dfa) ==
        "{\"alphabet\":3,\"states\":12,\"initial\":0,\"finals\":[10],\"dead\":11,\"transitions\":"
        "[[1,11,11],[11,2,11],[3,11,11],[11,4,11],[5,11,11],[11,6,1],[7,11,2],[11,8,3],[9,11,4],"
        "[11,10,5],[11,11,11],[11,11,11]]}\n");
  std::vector<std::string> names;
  for (const auto& l : d2.labels) names.push_back(l ? l->render() : "dead");
  CHECK(names == std::vector<std::string>{"q_{1,0}", "q_{1,1}", "q_{1,2}", "q_{1,3}", "q_{1,4}", "q_{1,5}",
                                          "q_{2,1,0}", "q_{2,1,1}", "q_{2,1,2}", "q_{2,1,3}", "q_{2,1,4}",
                                          "dead"});
}

TEST_CASE("D_i state counts and single final state") {
  const std::size_t expected[] = {7, 12, 22, 42, 82};
  for (std::size_t i = 1; i <= 5; ++i) {
    const auto d = build_lower_bound_dfa(w("01x3"), 3, i);
    CHECK(d.dfa.state_count() == expected[i - 1]);
    CHECK(d.dfa.finals().size() == 1);
    CHECK(d.dfa.alphabet_size() == 2 + i - 1);
    CHECK(d.dfa.dead() == static_cast<StateId>(d.dfa.state_count() - 1));
    CHECK(std::is_sorted(d.labels.begin(), d.labels.end() - 1));
  }
  for (const auto& [w1, k] : {std::pair{w("000"), 3u}, std::pair{w("012012"), 2u}, std::pair{w("0110x4"), 4u}}) {
    const std::size_t n = w1.size();
    for (std::size_t i = 1; i <= 5; ++i) {
      CHECK(build_lower_bound_dfa(w1, k, i).dfa.state_count() == (std::size_t{1} << (i - 1)) * (n - 1) + 2);
    }
  }
}

TEST_CASE("D_i accepts cyc_0(w_i)") {
  for (const auto& [w1, k] : {std::pair{w("01x3"), 3u}, std::pair{w("000"), 3u}, std::pair{w("012012"), 2u}}) {
    for (std::size_t i = 1; i <= 4; ++i) {
      const auto d = build_lower_bound_dfa(w1, k, i);
      CHECK(accepts(d.dfa, cyc(build_w(w1, k, i), 0)));
    }
  }
}

TEST_CASE("each q_{1,j} has exactly one a_{i-1} predecessor") {
  const Word w1 = w("01x3");
  for (std::size_t i = 2; i <= 4; ++i) {
    const auto d = build_lower_bound_dfa(w1, 3, i);
    const auto letter = static_cast<Symbol>(2 + i - 2);
    for (unsigned j = 1; j < 6; ++j) {
      const StateId target = *d.find(StateLabel{{1, j}});
      std::size_t preds = 0;
      for (std::size_t q = 0; q < d.dfa.state_count(); ++q) {
        preds += d.dfa.next(static_cast<StateId>(q), letter) == target;
      }
      CHECK(preds == 1);
    }
  }
}

TEST_CASE("D_i rejects bad bases") {
  CHECK_THROWS_AS(build_lower_bound_dfa(w("0110"), 3, 1), DfaError);
  CHECK_THROWS_AS(build_lower_bound_dfa(w("012012"), 3, 1), DfaError);
  CHECK_THROWS_AS(build_lower_bound_dfa(w("01x3"), 3, 0), DfaError);
}
