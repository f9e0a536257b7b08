#include <doctest.h>

#include "powerfree/text.hpp"

using namespace powerfree;

TEST_CASE("symbol form round trip") {
  const Word x({0, 1, 12, 3}, 13);
  CHECK(render_word(x) == "01[12]3");
  CHECK(parse_word("01[12]3") == x);
  CHECK(parse_word("01[12]3").alphabet_size() == 13);
  CHECK(render_word(Word(2)).empty());
}

TEST_CASE("repetition suffix") {
  CHECK(parse_word("01x3") == Word({0, 1, 0, 1, 0, 1}, 2));
  CHECK(parse_word("0x0").empty());
  CHECK(parse_word("[10]x2") == Word({10, 10}, 11));
  CHECK_THROWS_AS(parse_word("01x"), ParseError);
  CHECK_THROWS_AS(parse_word("01x2x2"), ParseError);
}

TEST_CASE("empty word spellings") {
  CHECK(parse_word("").empty());
  CHECK(parse_word("ε").empty());
  CHECK(parse_word("").alphabet_size() == 2);
}

TEST_CASE("declared alphabet") {
  CHECK(parse_word("0").alphabet_size() == 2);
  CHECK(parse_word("012").alphabet_size() == 3);
  CHECK(parse_word("01", 5).alphabet_size() == 5);
  CHECK_THROWS_AS(parse_word("012", 2), ParseError);
}

TEST_CASE("malformed symbol text") {
  CHECK_THROWS_AS(parse_word("01a"), ParseError);
  CHECK_THROWS_AS(parse_word("0[12"), ParseError);
  CHECK_THROWS_AS(parse_word("0[]"), ParseError);
  CHECK_THROWS_AS(parse_word("0[-1]"), ParseError);
}

TEST_CASE("code form") {
  const Word x({7, 7, 0, 24}, 25);
  CHECK(render_codes(x) == "7,7,0,24");
  CHECK(parse_codes("7,7,0,24", 25) == x);
  CHECK(parse_codes("", 25).empty());
  CHECK(parse_codes("ε", 25).empty());
  CHECK_THROWS_AS(parse_codes("25", 25), ParseError);
  CHECK_THROWS_AS(parse_codes("1,,2", 25), ParseError);
  CHECK_THROWS_AS(parse_codes("1,", 25), ParseError);
}
