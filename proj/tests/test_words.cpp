#include <doctest.h>

#include <random>
#include <set>

#include "ncg/errors.hpp"
#include "ncg/words.hpp"
#include "support/fixtures.hpp"

using namespace ncg;
using ncg::testing::S;
using ncg::testing::W;

TEST_CASE("free multiplication and inversion") {
  CHECK(fw_mul(W({1, 2}), W({-2, 3})) == W({1, 3}));
  CHECK(fw_mul(FreeWord{}, W({2, -1})) == W({2, -1}));
  CHECK(fw_mul(W({1, 2}), W({-2, -1})).empty());
  CHECK(fw_inv(W({1, 2})) == W({-2, -1}));
  CHECK(fw_inv(FreeWord{}).empty());
  CHECK(fw_inv(W({-3})) == W({3}));
  CHECK(W({1, 2, -2, -1, 3}) == W({3}));
}

TEST_CASE("winding length") {
  CHECK(winding_length(W({1, 2})) == 2);
  CHECK(winding_length(W({1, 2, -3, -2})) == 0);
  CHECK(winding_length(W({-2, 1, 2})) == 1);
  CHECK(winding_numbers(W({-2, 1, 2}), Rank(3)) == std::vector<int>{1, 0, 0});
}

TEST_CASE("free group laws on random words") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    FreeWord a = testing::random_word(rng, 3, 8);
    FreeWord b = testing::random_word(rng, 3, 8);
    FreeWord c = testing::random_word(rng, 3, 8);
    CHECK(fw_mul(fw_mul(a, b), c) == fw_mul(a, fw_mul(b, c)));
    CHECK(winding_length(fw_mul(a, b)) == winding_length(a) + winding_length(b));
    CHECK(fw_mul(a, fw_inv(a)).empty());
    CHECK(project(fw_mul(a, b)) == cox_mul(project(a), project(b)));
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1] != a[i].inverse());
  }
}

TEST_CASE("projection") {
  CHECK(project(W({-2, 1, 2})) == S({2, 1, 2}));
  CHECK(project(W({1, 1})).empty());
  CHECK(project(W({1, 2, -3, -2})) == S({1, 2, 3, 2}));
}

TEST_CASE("cox_normalize examples") {
  CHECK(cox_normalize(std::vector<int>{1, 2, 2, 1, 1}) == S({1}));
  CHECK(cox_normalize(std::vector<int>{1, 2, 3}) == S({1, 2, 3}));
  CHECK(cox_normalize(std::vector<int>{2, 2}).empty());
}

namespace {
  // One run of the deletion procedure choosing a random deletable pair each time.
  std::vector<int> random_deletions(std::vector<int> w, std::mt19937& rng) {
    while (true) {
      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) spots.push_back(i);
      }
      if (spots.empty()) return w;
      std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    }
  }
}  // namespace

TEST_CASE("cox_normalize is independent of deletion order") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> gen(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> w(static_cast<std::size_t>(trial % 15));
    for (int& x : w) x = gen(rng);
    CoxWord nf = cox_normalize(w);
    for (int run = 0; run < 8; ++run) {
      auto r = random_deletions(w, rng);
      CHECK(std::vector<int>(nf.letters().begin(), nf.letters().end()) == r);
    }
    CHECK(cox_normalize(nf.letters()) == nf);
  }
}

TEST_CASE("reflection recognition") {
  auto r = as_reflection(S({1, 2, 1}));
  CHECK(r.conjugator == S({1}));
  CHECK(r.content == 2);
  CHECK_THROWS_AS(as_reflection(S({1, 2})), DomainError);
  auto s = as_reflection(S({1}));
  CHECK(s.conjugator.empty());
  CHECK(s.content == 1);
}

TEST_CASE("odd squarefree words are reflections exactly when palindromic") {
  for (int len = 1; len <= 7; len += 2) {
    // All squarefree words of this length over s1..s3.
    std::vector<std::vector<int>> words{{}};
    for (int k = 0; k < len; ++k) {
      std::vector<std::vector<int>> next;
      for (const auto& w : words) {
        for (int s = 1; s <= 3; ++s) {
          if (!w.empty() && w.back() == s) continue;
          auto v = w;
          v.push_back(s);
          next.push_back(v);
        }
      }
      words = next;
    }
    for (const auto& w : words) {
      std::vector<int> rev(w.rbegin(), w.rend());
      CoxWord c(w);
      CHECK(is_reflection(c) == (w == rev));
      if (is_reflection(c)) {
        auto f = as_reflection(c);
        CHECK(f.conjugator.size() * 2 + 1 == c.size());
        std::vector<int> rebuilt(f.conjugator.letters().begin(), f.conjugator.letters().end());
        rebuilt.push_back(f.content);
        rebuilt.insert(rebuilt.end(), f.conjugator.letters().rbegin(), f.conjugator.letters().rend());
        CHECK(CoxWord(rebuilt) == c);
      }
    }
  }
}

TEST_CASE("braid reflections") {
  CHECK(is_braid_reflection(W({1}), Rank(2)));
  CHECK(is_braid_reflection(W({-2, 1, 2}), Rank(2)));
  CHECK_FALSE(is_braid_reflection(W({1, 2}), Rank(2)));
  CHECK_FALSE(is_braid_reflection(W({1, 1}), Rank(2)));
  CHECK_FALSE(is_braid_reflection(W({1, 2, -1, -2}), Rank(2)));
  // Every conjugate of a generator is a braid reflection.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    FreeWord x = testing::random_word(rng, 3, 5);
    int j = 1 + trial % 3;
    CHECK(is_braid_reflection(fw_conj(FreeWord::generator(j), x), Rank(3)));
  }
}

TEST_CASE("rank and letter validation") {
  CHECK_THROWS_AS(Rank(0), std::invalid_argument);
  CHECK_THROWS_AS(FreeWord({Letter{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CoxWord({0}), std::invalid_argument);
}

TEST_CASE("cyclic reduction and rotations") {
  auto d = cyclic_reduction(W({-2, 1, 2, 3, -1, 2}));
  CHECK(d.conjugator == W({-2, 1}));
  CHECK(d.core == W({2, 3}));
  CHECK(fw_mul(fw_mul(d.conjugator, d.core), fw_inv(d.conjugator)) == W({-2, 1, 2, 3, -1, 2}));
  auto r = rotations(W({1, 2, 3}));
  REQUIRE(r.size() == 3);
  CHECK(r[1] == W({2, 3, 1}));
}
