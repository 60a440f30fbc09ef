#pragma once

// Helpers shared by the test programs: compact word construction, seeded
// random words, and an exhaustive chord-diagram oracle that shares no code
// with the curve engine's strand comparisons.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <tuple>
#include <initializer_list>
#include <random>
#include <vector>

#include "ncg/curves.hpp"
#include "ncg/words.hpp"

namespace ncg::testing {

  // W({1, -2, 3}) = f1 f2^-1 f3
  inline FreeWord W(std::initializer_list<int> xs) {
    std::vector<Letter> l;
    for (int x : xs) l.push_back({std::abs(x), x > 0 ? 1 : -1});
    return FreeWord(l);
  }

  inline CoxWord S(std::initializer_list<int> xs) { return CoxWord(xs); }

  inline FreeWord random_word(std::mt19937& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, n);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> l;
    int target = len(rng);
    for (int i = 0; i < target; ++i) l.push_back({gen(rng), sign(rng) ? 1 : -1});
    return FreeWord(l);
  }

  // All reduced words of exactly `len` letters over f_1..f_n.
  inline std::vector<FreeWord> reduced_words(int n, int len) {
    std::vector<FreeWord> out;
    std::vector<Letter> cur;
    std::function<void()> rec = [&]() {
      if (static_cast<int>(cur.size()) == len) {
        out.emplace_back(cur);
        return;
      }
      for (int j = 1; j <= n; ++j) {
        for (int s : {1, -1}) {
          Letter l{j, s};
          if (!cur.empty() && cur.back() == l.inverse()) continue;
          cur.push_back(l);
          rec();
          cur.pop_back();
        }
      }
    };
    rec();
    return out;
  }

  inline std::vector<FreeWord> reduced_words_up_to(int n, int len) {
    std::vector<FreeWord> out;
    for (int k = 0; k <= len; ++k) {
      auto w = reduced_words(n, k);
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  // ---------------------------------------------------------------------
  // Exhaustive chord oracle.
  //
  // The boundary of the cut-open disk is listed explicitly: the arcs at the
  // basepoint from top to bottom, then for each gate its lower side from the
  // far end inwards and its upper side from the puncture outwards. A loop
  // configuration is a choice of order at every gate plus the order of the
  // basepoint arcs; two chords cross iff their endpoints interleave.
  // ---------------------------------------------------------------------

  struct Occurrence {
    int curve;
    int crossing;
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
  };

  struct Configuration {
    // gates[j] lists occurrences on gate j+1 from the puncture outwards.
    std::vector<std::vector<Occurrence>> gates;
    // Basepoint arcs from bottom to top, crossing 0 = outgoing, 1 = returning.
    std::vector<Occurrence> basepoint;
  };

  struct CrossingCounts {
    std::vector<int> self;  // per curve
    int mutual = 0;
  };

  inline CrossingCounts count_crossings(const std::vector<FreeWord>& words,
                                        const Configuration& cfg) {
    // Boundary position of every labelled point.
    struct Label {
      int kind;  // 0 terminal, 1 lower side, 2 upper side
      int curve;
      int crossing;
    };
    std::vector<Label> boundary;
    for (auto it = cfg.basepoint.rbegin(); it != cfg.basepoint.rend(); ++it) {
      boundary.push_back({0, it->curve, it->crossing});
    }
    for (const auto& gate : cfg.gates) {
      for (auto it = gate.rbegin(); it != gate.rend(); ++it) boundary.push_back({1, it->curve, it->crossing});
      for (const auto& o : gate) boundary.push_back({2, o.curve, o.crossing});
    }
    auto pos = [&](int kind, int curve, int crossing) {
      for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (boundary[i].kind == kind && boundary[i].curve == curve && boundary[i].crossing == crossing) {
          return static_cast<int>(i);
        }
      }
      std::abort();
    };
    struct Chord {
      int curve;
      int a;
      int b;
    };
    std::vector<Chord> chords;
    for (std::size_t c = 0; c < words.size(); ++c) {
      const FreeWord& w = words[c];
      const int ci = static_cast<int>(c);
      int prev = pos(0, ci, 0);
      for (std::size_t k = 0; k < w.size(); ++k) {
        // An upward crossing arrives from below the gate and leaves above it.
        int arrive = pos(w[k].sign > 0 ? 1 : 2, ci, static_cast<int>(k));
        chords.push_back({ci, prev, arrive});
        prev = pos(w[k].sign > 0 ? 2 : 1, ci, static_cast<int>(k));
      }
      chords.push_back({ci, prev, pos(0, ci, 1)});
    }
    CrossingCounts out;
    out.self.assign(words.size(), 0);
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        int lo = std::min(chords[i].a, chords[i].b);
        int hi = std::max(chords[i].a, chords[i].b);
        bool x = lo < chords[j].a && chords[j].a < hi;
        bool y = lo < chords[j].b && chords[j].b < hi;
        if (x == y) continue;
        if (chords[i].curve == chords[j].curve) {
          ++out.self[static_cast<std::size_t>(chords[i].curve)];
        } else {
          ++out.mutual;
        }
      }
    }
    return out;
  }

  // Calls visit(cfg) for every configuration of the given loops. Each
  // curve's basepoint orientation is fixed by out_below_in when given,
  // otherwise both are tried.
  template <class Visit>
  void for_each_configuration(int n, const std::vector<FreeWord>& words,
                              const std::vector<int>& out_below_in, Visit visit) {
    Configuration cfg;
    cfg.gates.assign(static_cast<std::size_t>(n), {});
    for (std::size_t c = 0; c < words.size(); ++c) {
      for (std::size_t k = 0; k < words[c].size(); ++k) {
        cfg.gates[static_cast<std::size_t>(words[c][k].index - 1)].push_back(
            {static_cast<int>(c), static_cast<int>(k)});
      }
    }
    std::vector<Occurrence> terminals;
    for (std::size_t c = 0; c < words.size(); ++c) {
      terminals.push_back({static_cast<int>(c), 0});
      terminals.push_back({static_cast<int>(c), 1});
    }
    auto key = [](const Occurrence& o) { return o.curve * 2 + o.crossing; };
    auto by_key = [&](const Occurrence& a, const Occurrence& b) { return key(a) < key(b); };
    auto by_slot = [](const Occurrence& a, const Occurrence& b) {
      return std::tie(a.curve, a.crossing) < std::tie(b.curve, b.crossing);
    };
    for (auto& g : cfg.gates) std::sort(g.begin(), g.end(), by_slot);
    std::sort(terminals.begin(), terminals.end(), by_key);

    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (j == cfg.gates.size()) {
        visit(cfg);
        return;
      }
      std::vector<Occurrence> saved = cfg.gates[j];
      do {
        rec(j + 1);
      } while (std::next_permutation(cfg.gates[j].begin(), cfg.gates[j].end(), by_slot));
      cfg.gates[j] = saved;
    };
    std::vector<Occurrence> order = terminals;
    do {
      bool ok = true;
      for (std::size_t c = 0; c < words.size() && c < out_below_in.size(); ++c) {
        if (out_below_in[c] < 0) continue;
        std::size_t out_pos = 0;
        std::size_t in_pos = 0;
        for (std::size_t h = 0; h < order.size(); ++h) {
          if (order[h].curve == static_cast<int>(c)) (order[h].crossing == 0 ? out_pos : in_pos) = h;
        }
        if ((out_pos < in_pos) != (out_below_in[c] == 1)) ok = false;
      }
      if (!ok) continue;
      cfg.basepoint = order;
      rec(0);
    } while (std::next_permutation(order.begin(), order.end(), by_key));
  }

  // Minimal self-intersection over all configurations of one loop.
  inline int brute_min_self(int n, const FreeWord& w, int out_below_in = -1) {
    int best = 1 << 30;
    for_each_configuration(n, {w}, {out_below_in}, [&](const Configuration& cfg) {
      best = std::min(best, count_crossings({w}, cfg).self[0]);
    });
    return best;
  }

  // Membership in NC_g by exhaustion.
  inline bool brute_nc_divisor(int n, const FreeWord& w) {
    if (w.empty()) return true;
    for (int x : winding_numbers(w, Rank(n))) {
      if (x != 0 && x != 1) return false;
    }
    return winding_length(w) > 0 && brute_min_self(n, w, 1) == 0;
  }

  // Minimal mutual intersection of two divisors of g over configurations
  // where both stay embedded; -1 if there is none.
  inline int brute_min_mutual(int n, const FreeWord& a, const FreeWord& b) {
    int best = -1;
    for_each_configuration(n, {a, b}, {1, 1}, [&](const Configuration& cfg) {
      CrossingCounts c = count_crossings({a, b}, cfg);
      if (c.self[0] != 0 || c.self[1] != 0) return;
      if (best < 0 || c.mutual < best) best = c.mutual;
    });
    return best;
  }

  // small inside big by exhaustion: some embedded disjoint configuration
  // nests the basepoint arcs of small between those of big.
  inline bool brute_contains(int n, const FreeWord& big, const FreeWord& small) {
    if (big == small || small.empty()) return true;
    if (big.empty()) return false;
    bool found = false;
    for_each_configuration(n, {big, small}, {1, 1}, [&](const Configuration& cfg) {
      if (found) return;
      CrossingCounts c = count_crossings({big, small}, cfg);
      if (c.self[0] != 0 || c.self[1] != 0 || c.mutual != 0) return;
      std::vector<int> h(4);
      for (std::size_t i = 0; i < cfg.basepoint.size(); ++i) {
        h[static_cast<std::size_t>(cfg.basepoint[i].curve * 2 + cfg.basepoint[i].crossing)] =
            static_cast<int>(i);
      }
      if (h[0] < h[2] && h[3] < h[1]) found = true;
    });
    return found;
  }

}  // namespace ncg::testing
