#include <doctest.h>

#include <random>

#include "ncg/errors.hpp"
#include "ncg/parse.hpp"
#include "support/fixtures.hpp"

using namespace ncg;
using ncg::testing::S;
using ncg::testing::W;

TEST_CASE("words") {
  CHECK(parse_free_word("f1.f2.f3^-1.f2^-1") == W({1, 2, -3, -2}));
  CHECK(parse_free_word("f1 f2") == W({1, 2}));
  CHECK(parse_free_word("e").empty());
  CHECK(parse_free_word("f1.f1^-1").empty());
  CHECK(parse_free_word("f12") == W({12}));
  CHECK(to_string(W({1, 2, -3, -2})) == "f1.f2.f3^-1.f2^-1");
  CHECK(to_string(FreeWord{}) == "e");
  CHECK(parse_cox_word("s1.s2.s2") == S({1}));
  CHECK(to_string(S({2, 1, 2})) == "s2.s1.s2");
  CHECK(to_string(CoxWord{}) == "e");
  CHECK(is_cox_text("(s1, s2)"));
  CHECK_FALSE(is_cox_text("(f1, f2)"));
}

TEST_CASE("braids and tuples") {
  CHECK(to_string(parse_braid("b1^-1.b2")) == "b1^-1.b2");
  CHECK(parse_braid("e").empty());
  CHECK(parse_free_tuple("(f1, f2^-1.f1.f2)") == FreeTuple{W({1}), W({-2, 1, 2})});
  CHECK(parse_cox_tuple("(s2,s2.s1.s2)") == CoxTuple{S({2}), S({2, 1, 2})});
  CHECK(to_string(FreeTuple{W({1}), FreeWord{}}) == "(f1, e)");
  CHECK(parse_element("[f1.f2.f1^-1][f1]") == std::vector<FreeWord>{W({1, 2, -1}), W({1})});
  CHECK(parse_element("").empty());
  CHECK(parse_element("e").empty());
  CHECK(format_set({1, 2}) == "{1,2}");
  CHECK(format_set({}) == "{}");
}

TEST_CASE("malformed input") {
  for (const char* bad : {"", "f", "f0", "x1", "f1^2", "f1..f2", "f1^-", "s1"}) {
    CHECK_THROWS_AS(parse_free_word(bad), ParseError);
  }
  CHECK_THROWS_AS(parse_cox_word("f1"), ParseError);
  CHECK_THROWS_AS(parse_cox_word("s1^-1"), ParseError);
  CHECK_THROWS_AS(parse_braid("f1"), ParseError);
  CHECK_THROWS_AS(parse_braid("b0"), ParseError);
  CHECK_THROWS_AS(parse_free_tuple("f1, f2"), ParseError);
  CHECK_THROWS_AS(parse_free_tuple("(f1, f2"), ParseError);
  CHECK_THROWS_AS(parse_element("[f1"), ParseError);
  CHECK_THROWS_AS(parse_element("f1]"), ParseError);
}

TEST_CASE("printed values parse back") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    FreeWord w = testing::random_word(rng, 5, 9);
    CHECK(parse_free_word(to_string(w)) == w);
    CoxWord c = project(w);
    CHECK(parse_cox_word(to_string(c)) == c);
    FreeTuple t{w, testing::random_word(rng, 5, 4)};
    CHECK(parse_free_tuple(to_string(t)) == t);
  }
}
