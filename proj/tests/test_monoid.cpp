#include <doctest.h>

#include <random>

#include "ncg/curves.hpp"
#include "ncg/errors.hpp"
#include "ncg/hurwitz.hpp"
#include "ncg/monoid.hpp"
#include "ncg/oracle.hpp"
#include "support/fixtures.hpp"

using namespace ncg;
using ncg::testing::W;

namespace {
  Simple sim(std::initializer_list<int> xs, int n = 2) { return simple_from_word(W(xs), Rank(n)); }

  std::vector<Simple> reflections(int n, int radius) {
    std::vector<Simple> out;
    for (const FreeWord& w : enum_divisor_words(Rank(n), radius)) {
      if (winding_length(w) == 1) out.push_back(simple_from_word(w, Rank(n)));
    }
    return out;
  }

  std::vector<Simple> random_product(std::mt19937& rng, const std::vector<Simple>& letters,
                                     int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::vector<Simple> out;
    for (int k = len(rng); k > 0; --k) out.push_back(letters[pick(rng)]);
    return out;
  }
}  // namespace

TEST_CASE("simple construction") {
  Simple a = sim({1});
  CHECK(a.interior() == std::vector<int>{1});
  CHECK(sim({-2, 1, 2}).interior() == std::vector<int>{1});
  CHECK(garside_simple(Rank(3)).interior() == std::vector<int>{1, 2, 3});
  CHECK(identity_simple(Rank(3)).is_identity());
  try {
    (void)sim({1, 1});
    FAIL("accepted f1.f1");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NotNonCrossing);
  }
  try {
    (void)sim({2, 1});
    FAIL("accepted f2.f1");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NotDivisor);
  }
}

TEST_CASE("complement and phi examples") {
  CHECK(complement(sim({1})).word() == W({2}));
  CHECK(complement(identity_simple(Rank(2))) == garside_simple(Rank(2)));
  CHECK(complement(sim({-2, 1, 2})).word() == W({-2, -1, 2, 1, 2}));
  CHECK(phi(sim({1})).word() == W({-2, 1, 2}));
  CHECK(phi(identity_simple(Rank(2))).is_identity());
  CHECK(phi(garside_simple(Rank(2))) == garside_simple(Rank(2)));
}

TEST_CASE("complement laws on enumerated simples") {
  for (int n = 2; n <= 3; ++n) {
    for (const FreeWord& w : enum_divisor_words(Rank(n), n == 2 ? 6 : 3)) {
      Simple a = simple_from_word(w, Rank(n));
      Simple c = complement(a);
      CHECK(winding_length(c.word()) == n - winding_length(w));
      CHECK(fw_mul(w, c.word()) == FreeWord::coxeter(Rank(n)));
      CHECK(complement(c) == phi(a));
      CHECK(is_nc_divisor(phi(a).word(), Rank(n)));
      CHECK(simple_divides(a, garside_simple(Rank(n))));
      CHECK(simple_divides(identity_simple(Rank(n)), a));
    }
  }
}

TEST_CASE("normalize examples") {
  std::vector<Simple> x{sim({1}), sim({2})};
  NormalForm nf = normalize(x);
  REQUIRE(nf.factors.size() == 1);
  CHECK(nf.factors[0] == garside_simple(Rank(2)));

  std::vector<Simple> y{sim({2}), sim({1})};
  CHECK(normalize(y).factors == y);
  std::vector<Simple> z{sim({1}), sim({1})};
  CHECK(normalize(z).factors == z);
  CHECK(normalize(std::vector<Simple>{}).factors.empty());
  std::vector<Simple> with_id{identity_simple(Rank(2)), sim({1}), identity_simple(Rank(2))};
  CHECK(normalize(with_id).factors == std::vector<Simple>{sim({1})});
}

TEST_CASE("monoid_equal examples") {
  std::vector<Simple> a{sim({1, 2, -1}), sim({1})};
  std::vector<Simple> b{sim({1}), sim({2})};
  std::vector<Simple> c{sim({2}), sim({1})};
  CHECK(monoid_equal(a, b));
  CHECK_FALSE(monoid_equal(b, c));
  CHECK(monoid_equal(std::vector<Simple>{}, std::vector<Simple>{}));
}

TEST_CASE("normal forms on random products") {
  std::mt19937 rng(97);
  for (int n = 2; n <= 3; ++n) {
    auto letters = reflections(n, n == 2 ? 6 : 3);
    REQUIRE(letters.size() >= 4);
    for (int trial = 0; trial < 300; ++trial) {
      auto x = random_product(rng, letters, 6);
      NormalForm nf = normalize(x);
      CHECK(multiply_out(nf.factors) == multiply_out(x));
      CHECK(normalize(nf.factors) == nf);
      int total = 0;
      for (const Simple& s : x) total += winding_length(s.word());
      int nf_total = 0;
      for (const Simple& s : nf.factors) {
        CHECK_FALSE(s.is_identity());
        nf_total += winding_length(s.word());
      }
      CHECK(total == nf_total);
      CHECK(winding_length(multiply_out(x)) == total);
      for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k) {
        CHECK(nc_meet(complement(nf.factors[k]).word(), nf.factors[k + 1].word(), Rank(n)).empty());
      }
      auto y = random_product(rng, letters, 6);
      CHECK(monoid_equal(x, y) == (multiply_out(x) == multiply_out(y)));
    }
  }
}

TEST_CASE("Hurwitz reshuffling keeps the normal form") {
  std::mt19937 rng(101);
  auto letters = reflections(3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    auto x = random_product(rng, letters, 4);
    if (x.size() < 2) continue;
    FreeTuple t;
    for (const Simple& s : x) t.push_back(s.word());
    NormalForm nf = normalize(x);
    for (const FreeTuple& u : orbit_ball(t, 2)) {
      std::vector<Simple> y;
      for (const FreeWord& w : u) {
        if (!is_nc_divisor(w, Rank(3))) {
          y.clear();
          break;
        }
        y.push_back(simple_from_word(w, Rank(3)));
      }
      if (y.size() != x.size()) continue;
      CHECK(normalize(y) == nf);
    }
  }
}
