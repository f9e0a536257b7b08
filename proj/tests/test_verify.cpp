#include <doctest.h>

#include "powerfree/text.hpp"
#include "powerfree/verify.hpp"

using namespace powerfree;

namespace {

void require_clean(const std::vector<PropertyReport>& reports) {
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) {
    INFO(format_report(r));
    CHECK(r.instances > 0);
    CHECK(r.passed());
  }
}

}  // namespace

TEST_CASE("report formatting") {
  PropertyReport r("demo");
  r.record(true, "a");
  CHECK(format_report(r) == "demo instances=1 counterexamples=0");
  r.record(false, "b");
  r.record(false, "c");
  CHECK(format_report(r) == "demo instances=3 counterexamples=2 first=b");
  CHECK_FALSE(r.passed());
}

TEST_CASE("suites run clean at a reduced size") {
  VerifyOptions options;
  options.max_len = 8;
  require_clean(verify_lemmas(options));
  require_clean(verify_theorem7(options));
  require_clean(verify_carpi(options));
}

TEST_CASE("simple power corpus") {
  const auto corpus = simple_power_corpus(36);
  CHECK(corpus.size() >= 20);
  for (const auto& [word, k] : corpus) {
    CHECK(word.size() <= 36);
    CHECK(is_simple_kpower(word, k));
  }
}

TEST_CASE("random automata are reproducible") {
  std::mt19937_64 a(9);
  std::mt19937_64 b(9);
  for (int i = 0; i < 10; ++i) CHECK(random_dfa(a, 4, 2) == random_dfa(b, 4, 2));
}

TEST_CASE("growth table rows") {
  const auto rows = growth_table(parse_word("01x3"), 3, 4, 2);
  REQUIRE(rows.size() == 4);
  const std::size_t states[] = {7, 12, 22, 42};
  const std::size_t lengths[] = {5, 35, 215, 1295};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows[i].i == i + 1);
    CHECK(rows[i].states == states[i]);
    CHECK(rows[i].witness_length == lengths[i]);
    CHECK(rows[i].log_ratio > 0);
  }
  CHECK(rows[0].measured == 5);
  CHECK(rows[1].measured == 35);
  CHECK_FALSE(rows[2].measured);
}
