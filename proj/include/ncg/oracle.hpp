#pragma once

// Brute-force references for testing: finite pieces of the divisor lattice
// of g obtained from Hurwitz orbits, and one-sided checks of meet / join.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncg/words.hpp"

namespace ncg {

  class DivisorPoset {
   public:
    // Sorts the elements (by height, then length, then letters) and caches
    // the containment matrix computed with curves::contains.
    DivisorPoset(Rank rank, std::vector<FreeWord> elements);

    Rank rank() const noexcept { return rank_; }
    const std::vector<FreeWord>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::optional<std::size_t> index_of(const FreeWord& w) const;
    // elements()[i] is contained in elements()[j].
    bool below(std::size_t i, std::size_t j) const { return leq_[i * elements_.size() + j]; }

   private:
    Rank rank_;
    std::vector<FreeWord> elements_;
    std::unordered_map<FreeWord, std::size_t> index_;
    std::vector<bool> leq_;
  };

  // Prefix products of every tuple in the radius ball around (f_1..f_n).
  std::vector<FreeWord> enum_divisor_words(Rank rank, int radius);
  DivisorPoset enum_divisors(Rank rank, int radius);
  // 6 for n = 2, 4 for n = 3, smaller beyond.
  int default_oracle_radius(Rank rank);

  // Algebraic route, independent of the curve engine's containment: for
  // a, b dividing g, a is below b iff a^{-1} b divides g.
  bool algebraic_below(const FreeWord& a, const FreeWord& b, Rank rank);

  struct BoundReport {
    bool ok = true;
    std::vector<std::string> failures;
  };

  // m should be the meet and j the join of a and b. Only soundness is
  // checked: the enumerated bounds cannot be complete.
  BoundReport oracle_bound_check(const FreeWord& a, const FreeWord& b, const FreeWord& m,
                                 const FreeWord& j, const DivisorPoset& poset);

  // One line per element: word<TAB>interior.
  void write_poset(std::ostream& os, const DivisorPoset& poset);
  std::string poset_line(const FreeWord& w, Rank rank);

}  // namespace ncg
