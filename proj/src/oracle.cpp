#include "ncg/oracle.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "ncg/curves.hpp"
#include "ncg/hurwitz.hpp"
#include "ncg/parse.hpp"

namespace ncg {

  namespace {
    bool height_order(const FreeWord& a, const FreeWord& b) {
      int ha = winding_length(a);
      int hb = winding_length(b);
      if (ha != hb) return ha < hb;
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    }

    std::vector<int> unit_set(const FreeWord& w, Rank rank) {
      std::vector<int> out;
      auto wn = winding_numbers(w, rank);
      for (std::size_t j = 0; j < wn.size(); ++j) {
        if (wn[j] == 1) out.push_back(static_cast<int>(j) + 1);
      }
      return out;
    }
  }  // namespace

  DivisorPoset::DivisorPoset(Rank rank, std::vector<FreeWord> elements)
      : rank_(rank), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), height_order);
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    const std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);
    leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // Containment can only go up in height.
        if (winding_length(elements_[i]) > winding_length(elements_[j])) continue;
        leq_[i * n + j] = contains(elements_[j], elements_[i], rank_);
      }
    }
  }

  std::optional<std::size_t> DivisorPoset::index_of(const FreeWord& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<FreeWord> enum_divisor_words(Rank rank, int radius) {
    std::unordered_set<FreeWord> seen;
    std::vector<FreeWord> out;
    for (const FreeTuple& t : orbit_ball(base_free_tuple(rank), radius)) {
      FreeWord p;
      if (seen.insert(p).second) out.push_back(p);
      for (const FreeWord& w : t) {
        p = fw_mul(p, w);
        if (seen.insert(p).second) out.push_back(p);
      }
    }
    std::sort(out.begin(), out.end(), height_order);
    return out;
  }

  DivisorPoset enum_divisors(Rank rank, int radius) {
    return DivisorPoset(rank, enum_divisor_words(rank, radius));
  }

  int default_oracle_radius(Rank rank) {
    switch (rank.value()) {
      case 1: return 1;
      case 2: return 6;
      case 3: return 4;
      default: return 2;
    }
  }

  bool algebraic_below(const FreeWord& a, const FreeWord& b, Rank rank) {
    return is_nc_divisor(a, rank) && is_nc_divisor(b, rank) &&
           is_nc_divisor(fw_mul(fw_inv(a), b), rank);
  }

  BoundReport oracle_bound_check(const FreeWord& a, const FreeWord& b, const FreeWord& m,
                                 const FreeWord& j, const DivisorPoset& poset) {
    const Rank rank = poset.rank();
    BoundReport r;
    auto fail = [&](std::string msg) {
      r.ok = false;
      r.failures.push_back(std::move(msg));
    };
    const std::string tag = "(" + to_string(a) + ", " + to_string(b) + "): ";
    if (!contains(a, m, rank) || !contains(b, m, rank)) fail(tag + "meet is not a lower bound");
    if (!contains(j, a, rank) || !contains(j, b, rank)) fail(tag + "join is not an upper bound");
    auto ia = poset.index_of(a);
    auto ib = poset.index_of(b);
    auto im = poset.index_of(m);
    auto ij = poset.index_of(j);
    auto leq = [&](std::size_t x, std::optional<std::size_t> cached, const FreeWord& y) {
      if (cached) return poset.below(x, *cached);
      return contains(y, poset.elements()[x], rank);
    };
    auto geq = [&](std::size_t x, std::optional<std::size_t> cached, const FreeWord& y) {
      if (cached) return poset.below(*cached, x);
      return contains(poset.elements()[x], y, rank);
    };
    for (std::size_t x = 0; x < poset.size(); ++x) {
      const FreeWord& w = poset.elements()[x];
      if (leq(x, ia, a) && leq(x, ib, b) && !leq(x, im, m)) {
        fail(tag + "lower bound " + to_string(w) + " not below the meet");
      }
      if (geq(x, ia, a) && geq(x, ib, b) && !geq(x, ij, j)) {
        fail(tag + "upper bound " + to_string(w) + " not above the join");
      }
    }
    return r;
  }

  std::string poset_line(const FreeWord& w, Rank rank) {
    return to_string(w) + "\t" + format_set(unit_set(w, rank));
  }

  void write_poset(std::ostream& os, const DivisorPoset& poset) {
    for (const FreeWord& w : poset.elements()) os << poset_line(w, poset.rank()) << '\n';
  }

}  // namespace ncg
