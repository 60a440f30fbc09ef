#pragma once

// Reduced words in the free group F_n = <f_1, ..., f_n> and squarefree
// normal forms in the universal Coxeter group W_n = <s_1, ..., s_n | s_i^2>.
// Generator indices are 1-based throughout.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ncg {

  // Number of punctures / generators.
  class Rank {
   public:
    explicit Rank(int n);
    int value() const noexcept { return n_; }
    friend bool operator==(Rank, Rank) = default;

   private:
    int n_;
  };

  struct Letter {
    int index = 1;  // 1..n
    int sign = 1;   // +1 or -1

    Letter inverse() const noexcept { return {index, -sign}; }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
  };

  // Element of F_n, stored as its unique reduced word.
  class FreeWord {
   public:
    FreeWord() = default;
    // Freely reduces `letters`.
    explicit FreeWord(std::span<const Letter> letters);
    FreeWord(std::initializer_list<Letter> letters);

    static FreeWord generator(int index, int sign = 1);
    // f_1 f_2 ... f_n, the standard Garside element.
    static FreeWord coxeter(Rank rank);

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    int max_index() const noexcept;

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

   private:
    std::vector<Letter> letters_;
  };

  FreeWord fw_mul(const FreeWord& a, const FreeWord& b);
  FreeWord fw_inv(const FreeWord& a);
  // x^{-1} a x
  FreeWord fw_conj(const FreeWord& a, const FreeWord& x);

  // Exponent sum; the winding number of the loop summed over all punctures.
  int winding_length(const FreeWord& a);
  // Per-puncture winding numbers, entry j-1 for puncture j.
  std::vector<int> winding_numbers(const FreeWord& a, Rank rank);

  // w = v u v^{-1} with u cyclically reduced.
  struct CyclicDecomposition {
    FreeWord conjugator;  // v
    FreeWord core;        // u
  };
  CyclicDecomposition cyclic_reduction(const FreeWord& w);
  // All cyclic rotations of a word (the word itself first).
  std::vector<FreeWord> rotations(const FreeWord& w);

  // Element of W_n, stored as its squarefree normal form.
  class CoxWord {
   public:
    CoxWord() = default;
    // Normalizes through cox_normalize.
    explicit CoxWord(std::span<const int> letters);
    CoxWord(std::initializer_list<int> letters);

    std::span<const int> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const CoxWord&, const CoxWord&) = default;
    friend auto operator<=>(const CoxWord&, const CoxWord&) = default;

   private:
    friend CoxWord cox_normalize(std::span<const int>);
    std::vector<int> letters_;
  };

  // Deletes the leftmost s_j s_j pattern until none remains.
  CoxWord cox_normalize(std::span<const int> letters);
  CoxWord cox_mul(const CoxWord& a, const CoxWord& b);
  CoxWord cox_inv(const CoxWord& a);
  CoxWord project(const FreeWord& a);

  // t = u_1 ... u_k s_t u_k ... u_1 in normal form.
  struct ReflectionForm {
    CoxWord conjugator;
    int content = 1;
    friend bool operator==(const ReflectionForm&, const ReflectionForm&) = default;
  };

  std::optional<ReflectionForm> try_as_reflection(const CoxWord& w);
  // Throws DomainError(NotReflection).
  ReflectionForm as_reflection(const CoxWord& w);
  bool is_reflection(const CoxWord& w);

  // Height-1 non-crossing element of F_n (a conjugate of some f_j).
  bool is_braid_reflection(const FreeWord& a, Rank rank);

  // Group operations under one name, used by code generic over F_n / W_n.
  inline FreeWord multiply(const FreeWord& a, const FreeWord& b) { return fw_mul(a, b); }
  inline FreeWord inverse(const FreeWord& a) { return fw_inv(a); }
  inline CoxWord multiply(const CoxWord& a, const CoxWord& b) { return cox_mul(a, b); }
  inline CoxWord inverse(const CoxWord& a) { return cox_inv(a); }

  std::size_t hash_value(const FreeWord& w) noexcept;
  std::size_t hash_value(const CoxWord& w) noexcept;

}  // namespace ncg

template <>
struct std::hash<ncg::FreeWord> {
  std::size_t operator()(const ncg::FreeWord& w) const noexcept { return ncg::hash_value(w); }
};

template <>
struct std::hash<ncg::CoxWord> {
  std::size_t operator()(const ncg::CoxWord& w) const noexcept { return ncg::hash_value(w); }
};
