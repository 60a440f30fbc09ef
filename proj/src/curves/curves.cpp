#include "ncg/curves.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "arc_system.hpp"
#include "ncg/errors.hpp"

namespace ncg {

  using detail::ArcSystem;
  using detail::ChordEvent;
  using detail::Endpoint;

  TautCurve::TautCurve(Rank rank, FreeWord word, std::vector<std::vector<int>> gate_orders,
                       std::vector<IntersectionWitness> witnesses, bool out_below_in)
      : rank_(rank),
        word_(std::move(word)),
        gate_orders_(std::move(gate_orders)),
        witnesses_(std::move(witnesses)),
        out_below_in_(out_below_in) {}

  namespace {
    void check_rank(const FreeWord& a, Rank rank) {
      if (a.max_index() > rank.value()) {
        throw std::invalid_argument("generator index exceeds rank");
      }
    }

    bool unit_windings(const FreeWord& a, Rank rank) {
      for (int w : winding_numbers(a, rank)) {
        if (w != 0 && w != 1) return false;
      }
      return true;
    }

    // Positive embedded loop in the disk bounded by the g-loop. A positive
    // loop based on the boundary leaves x_0 below where it returns.
    bool disk_embedded(const FreeWord& a, Rank rank) {
      if (a.empty()) return true;
      if (!unit_windings(a, rank) || winding_length(a) <= 0) return false;
      ArcSystem sys(rank, {a}, {true});
      return sys.crossing_count(0, 0) == 0;
    }

    // A conjugator y with y^{-1} a y in NC_g, if a is non-crossing.
    std::optional<FreeWord> disk_conjugator(const FreeWord& a, Rank rank) {
      if (disk_embedded(a, rank)) return FreeWord{};
      if (!unit_windings(a, rank) || winding_length(a) <= 0) return std::nullopt;
      // Non-crossing is invariant under pushing the basepoint around, i.e.
      // under conjugation, and every conjugacy class meeting NC_g does so in
      // a cyclic rotation of its cyclically reduced core.
      CyclicDecomposition d = cyclic_reduction(a);
      auto core = d.core.letters();
      for (std::size_t r = 0; r < core.size(); ++r) {
        FreeWord head(core.first(r));
        FreeWord y = fw_mul(d.conjugator, head);
        FreeWord rotated = fw_conj(a, y);
        if (disk_embedded(rotated, rank)) return y;
      }
      return std::nullopt;
    }

    void require_noncrossing(const FreeWord& a, Rank rank) {
      if (!is_noncrossing(a, rank)) {
        throw DomainError(ErrorKind::NotNonCrossing, "element is not non-crossing");
      }
    }

    void require_divisor(const FreeWord& a, Rank rank) {
      require_noncrossing(a, rank);
      if (!disk_embedded(a, rank)) {
        throw DomainError(ErrorKind::NotDivisor, "element does not divide g");
      }
    }

    // small inside big, both in NC_g.
    bool disk_contains(const FreeWord& big, const FreeWord& small, Rank rank) {
      if (big == small || small.empty()) return true;
      if (big.empty()) return false;
      if (winding_length(small) >= winding_length(big)) return false;
      ArcSystem sys(rank, {big, small}, {true, true});
      if (sys.crossing_count(0, 1) != 0) return false;
      return sys.basepoint_height(0, 0) < sys.basepoint_height(1, 0) &&
             sys.basepoint_height(1, 1) < sys.basepoint_height(0, 1);
    }

    TautCurve curve_of(const ArcSystem& sys, int c) {
      return TautCurve(sys.rank(), sys.word(c), sys.gate_orders_of(c), sys.crossings(c, c),
                       sys.out_below_in(c));
    }

    // Follows the boundary of a face of the two-curve arrangement, turning
    // onto the other curve at every crossing. Starts at the outgoing
    // terminal of `start`; at a returning terminal either stops or, when
    // `continue_above` holds and a higher terminal exists, resumes there.
    FreeWord trace(const ArcSystem& sys, int start, bool continue_above) {
      const auto& order = sys.basepoint_order();
      std::vector<Letter> letters;
      int c = start;
      int i = 0;
      std::optional<ChordEvent> entered;  // crossing through which we joined chord (c, i)
      std::size_t budget = 16;
      for (int k = 0; k < sys.curve_count(); ++k) {
        budget += 4 * static_cast<std::size_t>(sys.chord_count(k));
      }
      budget *= budget;
      for (std::size_t step = 0; step < budget; ++step) {
        auto events = sys.events_along(c, i);
        std::size_t next = 0;
        if (entered) {
          auto it = std::find_if(events.begin(), events.end(), [&](const ChordEvent& e) {
            return e.curve == entered->curve && e.chord == entered->chord;
          });
          if (it == events.end()) throw EngineError("lost track of a crossing while tracing");
          next = static_cast<std::size_t>(it - events.begin()) + 1;
        }
        if (next < events.size()) {
          ChordEvent e = events[next];
          entered = ChordEvent{c, i};
          c = e.curve;
          i = e.chord;
          continue;
        }
        entered.reset();
        if (i < sys.chord_count(c) - 1) {
          letters.push_back(sys.word(c)[static_cast<std::size_t>(i)]);
          ++i;
          continue;
        }
        const int h = sys.basepoint_height(c, 1);
        if (!continue_above || h + 1 == static_cast<int>(order.size())) {
          return FreeWord(letters);
        }
        const GateSlot above = order[static_cast<std::size_t>(h + 1)];
        if (above.crossing != 0) {
          throw EngineError("trace reached a returning arc from below");
        }
        c = above.curve;
        i = 0;
      }
      throw EngineError("trace did not close up");
    }

    // Gate orders for a pair where one loop is constant or both coincide;
    // a copy of a positive loop runs on the side away from its interior,
    // which is the far side of an upward crossing and the near side otherwise.
    std::vector<std::vector<GateSlot>> parallel_gate_orders(const FreeWord& a, const FreeWord& b,
                                                            Rank rank) {
      const FreeWord& w = a.empty() ? b : a;
      const int c = a.empty() ? 1 : 0;
      TautCurve t = realize(w, rank);
      std::vector<std::vector<GateSlot>> out(t.gate_orders().size());
      for (std::size_t j = 0; j < out.size(); ++j) {
        for (int k : t.gate_orders()[j]) {
          bool up = w[static_cast<std::size_t>(k)].sign > 0;
          if (a == b && !up) out[j].push_back(GateSlot{1, k});
          out[j].push_back(GateSlot{c, k});
          if (a == b && up) out[j].push_back(GateSlot{1, k});
        }
      }
      return out;
    }

    FreeWord certified(FreeWord w, Rank rank, const char* what) {
      if (!disk_embedded(w, rank)) {
        throw EngineError(std::string(what) + " produced a word outside NC_g");
      }
      return w;
    }
  }  // namespace

  TautCurve realize(const FreeWord& a, Rank rank) {
    check_rank(a, rank);
    ArcSystem below(rank, {a}, {true});
    if (a.empty() || below.crossing_count(0, 0) == 0) {
      return curve_of(below, 0);
    }
    ArcSystem above(rank, {a}, {false});
    if (above.crossing_count(0, 0) < below.crossing_count(0, 0)) {
      return curve_of(above, 0);
    }
    return curve_of(below, 0);
  }

  bool is_noncrossing(const FreeWord& a, Rank rank) {
    check_rank(a, rank);
    return disk_conjugator(a, rank).has_value();
  }

  bool is_nc_divisor(const FreeWord& a, Rank rank) {
    check_rank(a, rank);
    return disk_embedded(a, rank);
  }

  std::vector<int> interior(const TautCurve& c) {
    if (!c.embedded()) {
      throw DomainError(ErrorKind::NotEmbedded, "curve has self-intersections");
    }
    std::vector<int> out;
    auto w = winding_numbers(c.word(), c.rank());
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] == 1) out.push_back(static_cast<int>(j) + 1);
    }
    return out;
  }

  PairDiagram mutual_tighten(const FreeWord& a, const FreeWord& b, Rank rank) {
    check_rank(a, rank);
    check_rank(b, rank);
    require_noncrossing(a, rank);
    require_noncrossing(b, rank);
    // Loops outside NC_g keep the basepoint orientation realize picks for them.
    bool oa = disk_embedded(a, rank) || realize(a, rank).out_below_in();
    bool ob = disk_embedded(b, rank) || realize(b, rank).out_below_in();
    PairDiagram d{realize(a, rank), realize(b, rank), {}, {}, {}};
    if (a.empty() || b.empty() || a == b) {
      d.gate_orders = parallel_gate_orders(a, b, rank);
      if (b.empty()) {
        d.basepoint_order = {{0, oa ? 0 : 1}, {0, oa ? 1 : 0}, {1, 0}, {1, 1}};
      } else if (a.empty()) {
        d.basepoint_order = {{0, 0}, {0, 1}, {1, ob ? 0 : 1}, {1, ob ? 1 : 0}};
      } else {
        // The copy runs just outside the original.
        d.basepoint_order = {{1, 0}, {0, 0}, {0, 1}, {1, 1}};
      }
      return d;
    }
    ArcSystem sys(rank, {a, b}, {oa, ob});
    d.first = curve_of(sys, 0);
    d.second = curve_of(sys, 1);
    d.gate_orders = sys.gate_orders();
    d.basepoint_order = sys.basepoint_order();
    d.mutual = sys.crossings(0, 1);
    return d;
  }

  bool contains(const FreeWord& big, const FreeWord& small, Rank rank) {
    check_rank(big, rank);
    check_rank(small, rank);
    auto y = disk_conjugator(big, rank);
    if (!y) throw DomainError(ErrorKind::NotNonCrossing, "element is not non-crossing");
    require_noncrossing(small, rank);
    if (small.empty() || big == small) return true;
    if (big.empty()) return false;
    // Containment survives pushing the basepoint along y, which brings big
    // into the disk; anything inside it then lies in the disk as well.
    FreeWord b2 = fw_conj(big, *y);
    FreeWord s2 = fw_conj(small, *y);
    if (!disk_embedded(s2, rank)) return false;
    return disk_contains(b2, s2, rank);
  }

  FreeWord nc_join(const FreeWord& a, const FreeWord& b, Rank rank) {
    check_rank(a, rank);
    check_rank(b, rank);
    require_divisor(a, rank);
    require_divisor(b, rank);
    if (rank.value() == 1) {
      return a.empty() ? b : a;
    }
    if (disk_contains(a, b, rank)) return a;
    if (disk_contains(b, a, rank)) return b;
    ArcSystem sys(rank, {a, b}, {true, true});
    const int lowest = sys.basepoint_order().front().curve;
    if (sys.basepoint_order().front().crossing != 0) {
      throw EngineError("lowest basepoint arc is a returning one");
    }
    return certified(trace(sys, lowest, true), rank, "join");
  }

  FreeWord nc_meet(const FreeWord& a, const FreeWord& b, Rank rank) {
    check_rank(a, rank);
    check_rank(b, rank);
    require_divisor(a, rank);
    require_divisor(b, rank);
    if (rank.value() == 1) {
      return a.empty() ? a : b;
    }
    if (disk_contains(a, b, rank)) return b;
    if (disk_contains(b, a, rank)) return a;
    ArcSystem sys(rank, {a, b}, {true, true});
    const int a_out = sys.basepoint_height(0, 0);
    const int a_in = sys.basepoint_height(0, 1);
    const int b_out = sys.basepoint_height(1, 0);
    const int b_in = sys.basepoint_height(1, 1);
    if (a_in < b_out || b_in < a_out) {
      // The interiors leave x_0 in disjoint wedges.
      return FreeWord{};
    }
    const int start = a_out > b_out ? 0 : 1;
    return certified(trace(sys, start, false), rank, "meet");
  }

}  // namespace ncg
