#pragma once

// The monoid M_g with Garside element g = f_1 ... f_n. Its simples are the
// elements of NC_g and divisibility among simples is containment of loops.

#include <span>
#include <vector>

#include "ncg/words.hpp"

namespace ncg {

  class Simple {
   public:
    Rank rank() const noexcept { return rank_; }
    const FreeWord& word() const noexcept { return word_; }
    // Enclosed punctures, ascending.
    const std::vector<int>& interior() const noexcept { return interior_; }
    bool is_identity() const noexcept { return word_.empty(); }

    friend bool operator==(const Simple& a, const Simple& b) {
      return a.rank_ == b.rank_ && a.word_ == b.word_;
    }

   private:
    friend Simple simple_from_word(const FreeWord&, Rank);
    friend Simple certify_internal(const FreeWord&, Rank, const char*);
    Simple(Rank rank, FreeWord word, std::vector<int> interior)
        : rank_(rank), word_(std::move(word)), interior_(std::move(interior)) {}

    Rank rank_;
    FreeWord word_;
    std::vector<int> interior_;
  };

  // Throws NotNonCrossing or NotDivisor.
  Simple simple_from_word(const FreeWord& a, Rank rank);
  // For results that are simple by theory; a failure is an EngineError.
  Simple certify_internal(const FreeWord& a, Rank rank, const char* context);

  Simple identity_simple(Rank rank);
  Simple garside_simple(Rank rank);

  // a^{-1} g
  Simple complement(const Simple& a);
  // g^{-1} a g, which equals complement(complement(a)).
  Simple phi(const Simple& a);

  struct NormalForm {
    std::vector<Simple> factors;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
  };

  // Left-weighted form by sliding nc_meet(complement(a), b) from b into a
  // until a full pass changes nothing. Identity factors are dropped.
  NormalForm normalize(std::span<const Simple> factors);

  // Product in F_n of the factors.
  FreeWord multiply_out(std::span<const Simple> factors);

  bool monoid_equal(std::span<const Simple> x, std::span<const Simple> y);

  // a divides b; for simples the same as contains(b, a).
  bool simple_divides(const Simple& a, const Simple& b);

}  // namespace ncg
