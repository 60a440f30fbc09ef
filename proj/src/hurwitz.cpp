#include "ncg/hurwitz.hpp"

#include "ncg/curves.hpp"

namespace ncg {

  BraidWord::BraidWord(std::span<const BraidLetter> letters) {
    for (const BraidLetter& l : letters) {
      if (l.index < 1 || (l.sign != 1 && l.sign != -1)) {
        throw std::invalid_argument("invalid braid letter");
      }
      if (!letters_.empty() && letters_.back() == l.inverse()) {
        letters_.pop_back();
      } else {
        letters_.push_back(l);
      }
    }
  }

  BraidWord::BraidWord(std::initializer_list<BraidLetter> letters)
      : BraidWord(std::span<const BraidLetter>(letters.begin(), letters.size())) {}

  BraidWord braid_mul(const BraidWord& a, const BraidWord& b) {
    std::vector<BraidLetter> cat(a.letters().begin(), a.letters().end());
    cat.insert(cat.end(), b.letters().begin(), b.letters().end());
    return BraidWord(cat);
  }

  BraidWord braid_inv(const BraidWord& a) {
    std::vector<BraidLetter> out;
    for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return BraidWord(out);
  }

  FreeTuple base_free_tuple(Rank rank) {
    FreeTuple t;
    for (int j = 1; j <= rank.value(); ++j) t.push_back(FreeWord::generator(j));
    return t;
  }

  CoxTuple base_cox_tuple(Rank rank) {
    CoxTuple t;
    for (int j = 1; j <= rank.value(); ++j) t.push_back(CoxWord{j});
    return t;
  }

  std::size_t total_length(const CoxTuple& t) {
    std::size_t sum = 0;
    for (const CoxWord& w : t) sum += w.size();
    return sum;
  }

  bool is_red_T(const CoxTuple& t) {
    if (t.empty()) return false;
    const Rank rank(static_cast<int>(t.size()));
    for (const CoxWord& w : t) {
      if (!is_reflection(w)) return false;
      for (int s : w.letters()) {
        if (s > rank.value()) return false;
      }
    }
    return tuple_product(t) == tuple_product(base_cox_tuple(rank));
  }

  bool is_red_R(const FreeTuple& t) {
    if (t.empty()) return false;
    const Rank rank(static_cast<int>(t.size()));
    for (const FreeWord& w : t) {
      if (w.max_index() > rank.value() || !is_braid_reflection(w, rank)) return false;
    }
    return tuple_product(t) == FreeWord::coxeter(rank);
  }

  BraidWord descend(const CoxTuple& t) {
    if (!is_red_T(t)) {
      throw DomainError(ErrorKind::NotReduced, "tuple is not a reduced T-decomposition of c");
    }
    const int gens = static_cast<int>(t.size()) - 1;
    std::vector<BraidLetter> moves;
    CoxTuple cur = t;
    std::size_t len = total_length(cur);
    while (len > cur.size()) {
      bool moved = false;
      for (int i = 1; i <= gens && !moved; ++i) {
        for (int sign : {1, -1}) {
          CoxTuple next = hurwitz_move(cur, i, sign);
          std::size_t l = total_length(next);
          if (l < len) {
            moves.push_back({i, sign});
            cur = std::move(next);
            len = l;
            moved = true;
            break;
          }
        }
      }
      if (!moved) {
        throw DomainError(ErrorKind::NotReduced, "no length-reducing Hurwitz move");
      }
    }
    if (cur != base_cox_tuple(Rank(static_cast<int>(t.size())))) {
      throw DomainError(ErrorKind::NotReduced, "descent ended away from the base tuple");
    }
    // base = m_k ... m_1 . t, so t = m_1^{-1} ... m_k^{-1} . base.
    std::vector<BraidLetter> beta;
    for (const BraidLetter& m : moves) beta.push_back(m.inverse());
    return BraidWord(beta);
  }

  FreeTuple lift_tuple(const CoxTuple& t) {
    BraidWord beta = descend(t);
    return hurwitz_apply(beta, base_free_tuple(Rank(static_cast<int>(t.size()))));
  }

  FreeWord lift_reflection(const CoxWord& t, Rank rank, int max_radius) {
    if (!is_reflection(t)) {
      throw DomainError(ErrorKind::NotInTc, "not a reflection, so not in T_c");
    }
    {
      bool in_range = true;
      for (int s : t.letters()) in_range = in_range && s <= rank.value();
      if (in_range && rank.value() >= 1) {
        // Every slot can be brought to the front by sigma^{-1} moves without
        // changing its entry, so any slot is as good as the first.
        for (const auto& e : orbit_walk(base_cox_tuple(rank), max_radius)) {
          for (std::size_t i = 0; i < e.tuple.size(); ++i) {
            if (e.tuple[i] == t) return lift_tuple(e.tuple)[i];
          }
        }
      }
    }
    throw DomainError(ErrorKind::NotInTc, "no reduced T-decomposition of c within the search radius contains the reflection");
  }

  std::vector<FreeWord> tuple_to_chain(const FreeTuple& t) {
    if (!is_red_R(t)) {
      throw DomainError(ErrorKind::NotReduced, "tuple is not a reduced R-decomposition of g");
    }
    std::vector<FreeWord> chain{FreeWord{}};
    for (const FreeWord& w : t) chain.push_back(fw_mul(chain.back(), w));
    return chain;
  }

  FreeTuple chain_to_tuple(const std::vector<FreeWord>& chain) {
    FreeTuple t;
    for (std::size_t k = 1; k < chain.size(); ++k) {
      t.push_back(fw_mul(fw_inv(chain[k - 1]), chain[k]));
    }
    return t;
  }

}  // namespace ncg
