#include "ncg/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ncg/curves.hpp"
#include "ncg/errors.hpp"

namespace ncg {

  Rank::Rank(int n) : n_(n) {
    if (n < 1) {
      throw std::invalid_argument("rank must be at least 1, got " + std::to_string(n));
    }
  }

  namespace {
    void check_letter(const Letter& l) {
      if (l.index < 1 || (l.sign != 1 && l.sign != -1)) {
        throw std::invalid_argument("invalid free group letter");
      }
    }

    // Appends `l` to a reduced word, cancelling against the last letter.
    void push_reduced(std::vector<Letter>& word, const Letter& l) {
      if (!word.empty() && word.back() == l.inverse()) {
        word.pop_back();
      } else {
        word.push_back(l);
      }
    }
  }  // namespace

  FreeWord::FreeWord(std::span<const Letter> letters) {
    letters_.reserve(letters.size());
    for (const Letter& l : letters) {
      check_letter(l);
      push_reduced(letters_, l);
    }
  }

  FreeWord::FreeWord(std::initializer_list<Letter> letters)
      : FreeWord(std::span<const Letter>(letters.begin(), letters.size())) {}

  FreeWord FreeWord::generator(int index, int sign) {
    Letter l{index, sign};
    return FreeWord(std::span<const Letter>(&l, 1));
  }

  FreeWord FreeWord::coxeter(Rank rank) {
    std::vector<Letter> letters;
    for (int j = 1; j <= rank.value(); ++j) {
      letters.push_back({j, 1});
    }
    return FreeWord(letters);
  }

  int FreeWord::max_index() const noexcept {
    int m = 0;
    for (const Letter& l : letters_) {
      m = std::max(m, l.index);
    }
    return m;
  }

  FreeWord fw_mul(const FreeWord& a, const FreeWord& b) {
    auto la = a.letters();
    auto lb = b.letters();
    std::size_t i = la.size();
    std::size_t k = 0;
    while (i > 0 && k < lb.size() && la[i - 1] == lb[k].inverse()) {
      --i;
      ++k;
    }
    std::vector<Letter> out(la.begin(), la.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(out.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
    return FreeWord(out);
  }

  FreeWord fw_inv(const FreeWord& a) {
    std::vector<Letter> out;
    out.reserve(a.size());
    for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return FreeWord(out);
  }

  FreeWord fw_conj(const FreeWord& a, const FreeWord& x) {
    return fw_mul(fw_inv(x), fw_mul(a, x));
  }

  int winding_length(const FreeWord& a) {
    int sum = 0;
    for (const Letter& l : a.letters()) {
      sum += l.sign;
    }
    return sum;
  }

  std::vector<int> winding_numbers(const FreeWord& a, Rank rank) {
    std::vector<int> out(static_cast<std::size_t>(rank.value()), 0);
    for (const Letter& l : a.letters()) {
      if (l.index > rank.value()) {
        throw std::invalid_argument("generator index exceeds rank");
      }
      out[static_cast<std::size_t>(l.index - 1)] += l.sign;
    }
    return out;
  }

  CyclicDecomposition cyclic_reduction(const FreeWord& w) {
    auto l = w.letters();
    std::size_t lo = 0;
    std::size_t hi = l.size();
    while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
      ++lo;
      --hi;
    }
    std::vector<Letter> v(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(lo));
    std::vector<Letter> u(l.begin() + static_cast<std::ptrdiff_t>(lo),
                          l.begin() + static_cast<std::ptrdiff_t>(hi));
    return {FreeWord(v), FreeWord(u)};
  }

  std::vector<FreeWord> rotations(const FreeWord& w) {
    std::vector<FreeWord> out;
    auto l = w.letters();
    if (l.empty()) {
      out.push_back(w);
      return out;
    }
    std::vector<Letter> buf(l.size());
    for (std::size_t r = 0; r < l.size(); ++r) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        buf[i] = l[(r + i) % l.size()];
      }
      out.emplace_back(buf);
    }
    return out;
  }

  CoxWord::CoxWord(std::span<const int> letters) : letters_(cox_normalize(letters).letters_) {}

  CoxWord::CoxWord(std::initializer_list<int> letters)
      : CoxWord(std::span<const int>(letters.begin(), letters.size())) {}

  CoxWord cox_normalize(std::span<const int> letters) {
    // A stack scan deletes, at each step, the leftmost adjacent equal pair of
    // the current sequence: every earlier position is already squarefree.
    CoxWord out;
    out.letters_.reserve(letters.size());
    for (int s : letters) {
      if (s < 1) {
        throw std::invalid_argument("invalid Coxeter generator");
      }
      if (!out.letters_.empty() && out.letters_.back() == s) {
        out.letters_.pop_back();
      } else {
        out.letters_.push_back(s);
      }
    }
    return out;
  }

  CoxWord cox_mul(const CoxWord& a, const CoxWord& b) {
    std::vector<int> cat(a.letters().begin(), a.letters().end());
    cat.insert(cat.end(), b.letters().begin(), b.letters().end());
    return cox_normalize(cat);
  }

  CoxWord cox_inv(const CoxWord& a) {
    std::vector<int> rev(a.letters().rbegin(), a.letters().rend());
    return cox_normalize(rev);
  }

  CoxWord project(const FreeWord& a) {
    std::vector<int> idx;
    idx.reserve(a.size());
    for (const Letter& l : a.letters()) {
      idx.push_back(l.index);
    }
    return cox_normalize(idx);
  }

  std::optional<ReflectionForm> try_as_reflection(const CoxWord& w) {
    auto l = w.letters();
    if (l.size() % 2 == 0) {
      return std::nullopt;
    }
    if (!std::equal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2), l.rbegin())) {
      return std::nullopt;
    }
    std::size_t k = l.size() / 2;
    return ReflectionForm{CoxWord(l.first(k)), l[k]};
  }

  ReflectionForm as_reflection(const CoxWord& w) {
    auto r = try_as_reflection(w);
    if (!r) {
      throw DomainError(ErrorKind::NotReflection, "word is not a reflection of W_n");
    }
    return *r;
  }

  bool is_reflection(const CoxWord& w) { return try_as_reflection(w).has_value(); }

  bool is_braid_reflection(const FreeWord& a, Rank rank) {
    return winding_length(a) == 1 && is_noncrossing(a, rank);
  }

  std::size_t hash_value(const FreeWord& w) noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const Letter& l : w.letters()) {
      h ^= static_cast<std::size_t>(l.index * 2 + (l.sign > 0 ? 1 : 0));
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::size_t hash_value(const CoxWord& w) noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (int s : w.letters()) {
      h ^= static_cast<std::size_t>(s);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

}  // namespace ncg
