#include <doctest.h>

#include "oracles.hpp"
#include "powerfree/constructions.hpp"
#include "powerfree/morphisms.hpp"
#include "powerfree/text.hpp"

using namespace powerfree;

namespace {

Word w(const char* text) { return parse_word(text); }

bool brute_circular(const oracle::Symbols& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    oracle::Symbols r(s.begin() + static_cast<std::ptrdiff_t>(i), s.end());
    r.insert(r.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
    if (oracle::has_kpower(r, 2)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("least circularly square-free ternary words") {
  CHECK(find_circularly_squarefree(3) == w("012"));
  CHECK_FALSE(find_circularly_squarefree(5));
  const auto p18 = find_circularly_squarefree(18);
  REQUIRE(p18);
  CHECK(p18->size() == 18);
  CHECK(is_circularly_squarefree(*p18));
  CHECK_THROWS_AS(find_circularly_squarefree(0), WordError);
}

TEST_CASE("circular search agrees with enumeration up to length 10") {
  for (std::size_t n = 1; n <= 10; ++n) {
    std::optional<Word> least;
    for (const auto& s : oracle::all_words(3, n)) {
      if (brute_circular(s)) {
        least = oracle::word(s, 3);
        break;
      }
    }
    CHECK(find_circularly_squarefree(n) == least);
  }
}

TEST_CASE("lengths without a circularly square-free word") {
  std::vector<std::size_t> missing;
  for (std::size_t n = 1; n <= 24; ++n) {
    if (!find_circularly_squarefree(n)) missing.push_back(n);
  }
  CHECK(missing == std::vector<std::size_t>{5, 7, 9, 10, 14, 17});
}

TEST_CASE("witnesses for lengths 18 to 24 square to simple squares") {
  for (std::size_t n = 18; n <= 24; ++n) {
    const auto p = find_circularly_squarefree(n);
    REQUIRE(p);
    CHECK(is_simple_kpower(p->power(2), 2));
  }
}

TEST_CASE("base simple powers") {
  CHECK(base_simple_power(3, 1) == w("010101"));
  CHECK(base_simple_power(3, 0) == w("000"));
  CHECK(base_simple_power(2, 3) == w("012012"));
  CHECK(base_simple_power(4, 2) == w("0110x4"));
  CHECK(base_simple_power(3, 1).alphabet_size() == 2);
  CHECK(base_simple_power(2, 3).alphabet_size() == 3);
  CHECK_THROWS_AS(base_simple_power(2, 5), WordError);
  CHECK_THROWS_AS(base_simple_power(1, 2), WordError);
  for (std::size_t e = 0; e <= 5; ++e) {
    for (unsigned k : {3u, 4u}) CHECK(is_simple_kpower(base_simple_power(k, e), k));
  }
}

TEST_CASE("the w_i family") {
  const Word w1 = w("01x3");
  CHECK(build_w(w1, 3, 1) == w1);
  CHECK(build_w(w1, 3, 2) == w("010102101012x3"));
  CHECK(build_w(w1, 3, 2).alphabet_size() == 3);
  CHECK(build_w(w1, 3, 3).size() == 216);
  CHECK(build_w(w1, 3, 3).alphabet_size() == 4);
  CHECK_THROWS_AS(build_w(w("0110"), 3, 2), WordError);
  CHECK_THROWS_AS(build_w(w("012012"), 3, 2), WordError);
  CHECK_THROWS_AS(build_w(w1, 3, 0), WordError);
}

TEST_CASE("w_i is a simple k-power whose cyc_0 is k-power-free") {
  for (const auto& [w1, k] : {std::pair{w("01x3"), 3u}, std::pair{w("000"), 3u}, std::pair{w("012012"), 2u},
                              std::pair{w("0110x4"), 4u}}) {
    const std::size_t n = w1.size();
    std::size_t length = 1;
    for (std::size_t i = 1; i <= 3; ++i) {
      length *= n;
      const Word wi = build_w(w1, k, i);
      CHECK(wi.size() == length);
      CHECK(is_simple_kpower(wi, k));
      CHECK_FALSE(find_kpower(cyc(wi, 0), k));
    }
  }
}

TEST_CASE("blocks of w_{i+1} repeat with period n/k") {
  const Word w1 = w("01x3");
  for (std::size_t i = 1; i <= 2; ++i) {
    const Word wi = build_w(w1, 3, i);
    const Word next = build_w(w1, 3, i + 1);
    const std::size_t block = wi.size();
    for (std::size_t j = 0; j < 6; ++j) {
      const auto sep = static_cast<Symbol>(2 + i - 1);
      CHECK(next[(j + 1) * block - 1] == sep);
      std::size_t shift = 1;
      for (std::size_t e = 1; e < i; ++e) shift *= 6;
      CHECK(next.factor(j * block, block - 1) == cyc(wi, j * shift));
      if (j + 2 < 6) CHECK(next.factor(j * block, block) == next.factor((j + 2) * block, block));
    }
  }
}

TEST_CASE("separator cores") {
  CHECK(separator_cores(3, 3) == std::vector<Word>{w("0"), w("1"), w("00")});
  CHECK(separator_cores(2, 4) == std::vector<Word>{w("0"), w("1"), w("2"), w("01")});
  for (const auto& c : separator_cores(3, 40)) CHECK_FALSE(find_kpower(c, 3));
}

TEST_CASE("the fixed-alphabet family w'_i") {
  const Word w1 = w("01x3");
  CHECK(build_w_prime(w1, 3, 1) == w1);
  const Word w2 = build_w_prime(w1, 3, 2);
  CHECK(w2.size() == 48);
  CHECK(w2.factor(5, 3) == w("202"));
  for (std::size_t i = 1; i <= 4; ++i) {
    const Word wi = build_w_prime(w1, 3, i);
    for (Symbol s : wi) CHECK(s < 3);
  }
}

TEST_CASE("w'_i keeps its properties at i = 2 but not beyond") {
  // The block shifts stay n^{i-1} while the blocks grow past n^i, so the
  // literal construction stops producing simple powers at i = 3.
  const Word w1 = w("01x3");
  const Word w2 = build_w_prime(w1, 3, 2);
  CHECK(is_simple_kpower(w2, 3));
  CHECK_FALSE(find_kpower(cyc(w2, 0), 3));
  const Word w3 = build_w_prime(w1, 3, 3);
  CHECK(w3.size() == 300);
  CHECK_FALSE(is_simple_kpower(w3, 3));
  CHECK(find_kpower(cyc(w3, 0), 3));

  const Word s2 = build_w_prime(w("012012"), 2, 2);
  CHECK_FALSE(is_simple_kpower(s2, 2));
  CHECK(s2.factor(20, 4) == w("0303"));
}

TEST_CASE("simple overlaps") {
  CHECK(simple_overlap_from_square(w("0101")) == w("01010"));
  CHECK(simple_overlap_from_square(w("012012")) == w("0120120"));
  CHECK_THROWS_AS(simple_overlap_from_square(w("0110")), WordError);
  CHECK_THROWS_AS(simple_overlap_from_square(w("0000")), WordError);
  const Word o = simple_overlap_from_square(w("012012"));
  CHECK(find_overlap(o));
  CHECK_FALSE(find_overlap(o.factor(0, o.size() - 1)));
  CHECK_FALSE(find_overlap(o.factor(1, o.size())));
}
