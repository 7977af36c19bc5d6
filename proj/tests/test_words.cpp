#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gri/error.hpp"
#include "gri/words.hpp"

using namespace gri;

TEST_CASE("syllables and exponents") {
  const std::vector<std::string> gens{"a", "b"};
  CHECK(parse_word("a^2 b a^-1", gens) == Word{{0, 2}, {1, 1}, {0, -1}});
  CHECK(parse_word("ab", gens) == Word{{0, 1}, {1, 1}});
  CHECK(parse_word("1", gens).empty());
  CHECK(parse_word("A", gens) == Word{{0, -1}});
  CHECK(parse_word("B^2", gens) == Word{{1, -2}});
}

TEST_CASE("longest generator name wins") {
  const std::vector<std::string> gens{"x", "x1"};
  CHECK(parse_word("x1x", gens) == Word{{1, 1}, {0, 1}});
}

TEST_CASE("errors carry positions") {
  const std::vector<std::string> gens{"a", "b"};
  try {
    parse_word("a^", gens, 10);
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Syntax);
    REQUIRE(e.position());
    CHECK(*e.position() >= 10);
  }
  try {
    parse_word("a c", gens);
    FAIL("expected an unknown generator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownGenerator);
  }
}

TEST_CASE("inverse, reduce, format") {
  const std::vector<std::string> gens{"a", "b"};
  const Word w = parse_word("a^2 b", gens);
  CHECK(inverse_word(w) == Word{{1, -1}, {0, -2}});
  CHECK(reduce_word(Word{{0, 1}, {0, 2}, {1, 1}, {1, -1}}) == Word{{0, 3}});
  CHECK(format_word(w, gens) == "a^2 b");
  CHECK(format_word({}, gens) == "1");
  CHECK(parse_word(format_word(w, gens), gens) == w);
}
