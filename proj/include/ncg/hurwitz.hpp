#pragma once

// Hurwitz action of the braid group B_n on n-tuples over F_n and W_n.
//
//   sigma_i . (.., g_i, g_{i+1}, ..) = (.., g_i g_{i+1} g_i^{-1}, g_i, ..)
//
// Braids are only ever words; two braids are compared through their action.

#include <cstddef>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "ncg/errors.hpp"
#include "ncg/words.hpp"

namespace ncg {

  struct BraidLetter {
    int index = 1;  // 1..n-1
    int sign = 1;

    BraidLetter inverse() const noexcept { return {index, -sign}; }
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
    friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
  };

  // Freely reduced word in sigma_1^{+-1} .. sigma_{n-1}^{+-1}. Braid relations
  // are not applied.
  class BraidWord {
   public:
    BraidWord() = default;
    explicit BraidWord(std::span<const BraidLetter> letters);
    BraidWord(std::initializer_list<BraidLetter> letters);

    std::span<const BraidLetter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

   private:
    std::vector<BraidLetter> letters_;
  };

  BraidWord braid_mul(const BraidWord& a, const BraidWord& b);
  BraidWord braid_inv(const BraidWord& a);

  template <class W>
  using Tuple = std::vector<W>;
  using FreeTuple = Tuple<FreeWord>;
  using CoxTuple = Tuple<CoxWord>;

  struct TupleHash {
    template <class W>
    std::size_t operator()(const Tuple<W>& t) const noexcept {
      std::size_t h = 0x9e3779b97f4a7c15ULL;
      for (const W& w : t) {
        h ^= hash_value(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  FreeTuple base_free_tuple(Rank rank);  // (f_1, ..., f_n)
  CoxTuple base_cox_tuple(Rank rank);    // (s_1, ..., s_n)

  template <class W>
  W tuple_product(const Tuple<W>& t) {
    W p;
    for (const W& w : t) p = multiply(p, w);
    return p;
  }

  // One generator sigma_i^{sign}. Throws IndexOutOfRange.
  template <class W>
  Tuple<W> hurwitz_move(const Tuple<W>& t, int index, int sign) {
    if (index < 1 || static_cast<std::size_t>(index) >= t.size()) {
      throw DomainError(ErrorKind::IndexOutOfRange, "braid generator index out of range");
    }
    Tuple<W> out = t;
    const std::size_t i = static_cast<std::size_t>(index - 1);
    const W& a = t[i];
    const W& b = t[i + 1];
    if (sign > 0) {
      out[i] = multiply(multiply(a, b), inverse(a));
      out[i + 1] = a;
    } else {
      out[i] = b;
      out[i + 1] = multiply(multiply(inverse(b), a), b);
    }
    return out;
  }

  // Left action: the last letter of beta acts first.
  template <class W>
  Tuple<W> hurwitz_apply(const BraidWord& beta, const Tuple<W>& t) {
    Tuple<W> out = t;
    auto l = beta.letters();
    for (auto it = l.rbegin(); it != l.rend(); ++it) {
      out = hurwitz_move(out, it->index, it->sign);
    }
    return out;
  }

  // Sum of entry lengths.
  std::size_t total_length(const CoxTuple& t);

  bool is_red_T(const CoxTuple& t);
  bool is_red_R(const FreeTuple& t);

  // beta with hurwitz_apply(beta, (s_1..s_n)) = t. Throws NotReduced.
  BraidWord descend(const CoxTuple& t);
  // The tuple of Red_R(g) over t. Throws NotReduced.
  FreeTuple lift_tuple(const CoxTuple& t);
  // The braid reflection dividing g over a reflection of T_c. Throws NotInTc.
  FreeWord lift_reflection(const CoxWord& t, Rank rank, int max_radius = 8);

  // Orbit element together with a braid reaching it from the start tuple.
  template <class W>
  struct OrbitEntry {
    Tuple<W> tuple;
    BraidWord braid;
  };

  // Breadth-first ball of braid-word radius `radius`, in discovery order.
  template <class W>
  std::vector<OrbitEntry<W>> orbit_walk(const Tuple<W>& start, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    std::vector<OrbitEntry<W>> out;
    std::unordered_set<Tuple<W>, TupleHash> seen;
    out.push_back({start, BraidWord{}});
    seen.insert(start);
    std::size_t frontier_begin = 0;
    const int gens = static_cast<int>(start.size()) - 1;
    for (int r = 0; r < radius; ++r) {
      const std::size_t frontier_end = out.size();
      for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
        for (int i = 1; i <= gens; ++i) {
          for (int sign : {1, -1}) {
            Tuple<W> next = hurwitz_move(out[k].tuple, i, sign);
            if (seen.contains(next)) continue;
            BraidLetter m{i, sign};
            BraidWord braid = braid_mul(BraidWord{m}, out[k].braid);
            seen.insert(next);
            out.push_back({std::move(next), std::move(braid)});
          }
        }
      }
      frontier_begin = frontier_end;
    }
    return out;
  }

  template <class W>
  std::vector<Tuple<W>> orbit_ball(const Tuple<W>& start, int radius) {
    std::vector<Tuple<W>> out;
    for (auto& e : orbit_walk(start, radius)) out.push_back(std::move(e.tuple));
    return out;
  }

  // Prefix products (e, t_1, t_1 t_2, ..., g). Throws NotReduced.
  std::vector<FreeWord> tuple_to_chain(const FreeTuple& t);
  // Consecutive quotients a_{k-1}^{-1} a_k.
  FreeTuple chain_to_tuple(const std::vector<FreeWord>& chain);

}  // namespace ncg
