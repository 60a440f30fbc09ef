#include "arc_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncg/errors.hpp"
#include "ncg/simd/interleave.hpp"

namespace ncg::detail {

  namespace {
    // Bottom-up merge sort. Unlike std::sort it stays well defined if the
    // comparator is not a strict weak order, which happens for comparisons
    // between strands of a loop that is not in minimal position.
    template <class T, class Less>
    void merge_sort(std::vector<T>& v, Less less) {
      std::vector<T> buf(v.size());
      for (std::size_t width = 1; width < v.size(); width *= 2) {
        for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
          std::size_t mid = std::min(lo + width, v.size());
          std::size_t hi = std::min(lo + 2 * width, v.size());
          std::size_t i = lo;
          std::size_t j = mid;
          std::size_t k = lo;
          while (i < mid && j < hi) {
            buf[k++] = less(v[j], v[i]) ? v[j++] : v[i++];
          }
          while (i < mid) buf[k++] = v[i++];
          while (j < hi) buf[k++] = v[j++];
        }
        v.swap(buf);
      }
    }

    bool chords_cross(std::int32_t lo, std::int32_t hi, std::int32_t a, std::int32_t b) {
      return (lo < a && a < hi) != (lo < b && b < hi);
    }
  }  // namespace

  ArcSystem::ArcSystem(Rank rank, std::vector<FreeWord> words, std::vector<bool> out_below_in)
      : rank_(rank), words_(std::move(words)), out_below_in_(std::move(out_below_in)) {
    if (words_.empty() || words_.size() > 2 || out_below_in_.size() != words_.size()) {
      throw std::invalid_argument("arc system holds one or two curves");
    }
    for (const FreeWord& w : words_) {
      if (w.max_index() > rank_.value()) {
        throw std::invalid_argument("generator index exceeds rank");
      }
    }
    order_basepoint();
    order_gates();
    assign_coordinates();
  }

  Side ArcSystem::incoming_side(int c, int k) const {
    return word(c)[static_cast<std::size_t>(k)].sign > 0 ? Side::Lower : Side::Upper;
  }

  Endpoint ArcSystem::gate_point(int c, int k, Side side) const {
    return Endpoint{false, c, k, word(c)[static_cast<std::size_t>(k)].index, side};
  }

  Endpoint ArcSystem::chord_start(int c, int i) const {
    if (i == 0) {
      return Endpoint{true, c, 0, 0, Side::Lower};
    }
    Side in = incoming_side(c, i - 1);
    return gate_point(c, i - 1, in == Side::Lower ? Side::Upper : Side::Lower);
  }

  Endpoint ArcSystem::chord_end(int c, int i) const {
    if (i == static_cast<int>(word(c).size())) {
      return Endpoint{true, c, 1, 0, Side::Lower};
    }
    return gate_point(c, i, incoming_side(c, i));
  }

  Endpoint ArcSystem::far(const Endpoint& p) const {
    if (p.terminal) {
      return p.crossing == 0 ? chord_end(p.curve, 0)
                             : chord_start(p.curve, static_cast<int>(word(p.curve).size()));
    }
    if (p.side == incoming_side(p.curve, p.crossing)) {
      return chord_start(p.curve, p.crossing);
    }
    return chord_end(p.curve, p.crossing + 1);
  }

  Endpoint ArcSystem::reflect(const Endpoint& p) {
    Endpoint q = p;
    q.side = p.side == Side::Lower ? Side::Upper : Side::Lower;
    return q;
  }

  int ArcSystem::cyclic_offset(int block, int from) const noexcept {
    int blocks = 2 * rank_.value() + 1;
    return ((block - from) % blocks + blocks) % blocks;
  }

  bool ArcSystem::precedes(Endpoint p, Endpoint q, bool basepoint_known, int* steps) const {
    // Chords (p, x) and (q, y) leaving one block cannot cross, so p precedes
    // q exactly when x comes after y. When x and y share a gate side the
    // question moves to the far side of that gate, with the same polarity.
    int total = 0;
    for (int c = 0; c < curve_count(); ++c) {
      total += chord_count(c);
    }
    for (int step = 0; step <= total; ++step) {
      if (steps != nullptr) *steps = step;
      const int s = p.block();
      Endpoint x = far(p);
      Endpoint y = far(q);
      const int bx = x.block();
      const int by = y.block();
      if (bx == s || by == s) {
        throw EngineError("chord returns to its own gate side (word not reduced)");
      }
      if (bx != by) {
        return cyclic_offset(bx, s) > cyclic_offset(by, s);
      }
      if (bx == 0) {
        if (!basepoint_known) {
          throw EngineError("parallel strands end together at the basepoint");
        }
        return cluster_position(x) > cluster_position(y);
      }
      p = reflect(x);
      q = reflect(y);
    }
    throw EngineError("strand comparison did not terminate");
  }

  int ArcSystem::cluster_position(const Endpoint& t) const {
    int arcs = 2 * curve_count();
    return arcs - 1 - basepoint_height(t.curve, t.crossing);
  }

  int ArcSystem::basepoint_height(int c, int which) const {
    return terminal_height_[static_cast<std::size_t>(c)][static_cast<std::size_t>(which)];
  }

  void ArcSystem::order_basepoint() {
    std::vector<Endpoint> arcs;
    for (int c = 0; c < curve_count(); ++c) {
      arcs.push_back(Endpoint{true, c, 0, 0, Side::Lower});
      arcs.push_back(Endpoint{true, c, 1, 0, Side::Lower});
    }
    const std::size_t t = arcs.size();
    // below[a][b]: arc a leaves the basepoint under arc b.
    std::vector<std::vector<bool>> below(t, std::vector<bool>(t, false));
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = a + 1; b < t; ++b) {
        bool a_below_b;
        if (arcs[a].curve == arcs[b].curve) {
          bool out_first = arcs[a].crossing == 0;
          a_below_b = out_first == out_below_in(arcs[a].curve);
        } else {
          // Top of the basepoint block comes first in boundary order.
          a_below_b = !precedes(arcs[a], arcs[b], false);
        }
        below[a][b] = a_below_b;
        below[b][a] = !a_below_b;
      }
    }
    std::vector<std::size_t> idx(t);
    std::vector<int> score(t, 0);
    for (std::size_t a = 0; a < t; ++a) {
      idx[a] = a;
      for (std::size_t b = 0; b < t; ++b) {
        if (below[b][a]) ++score[a];
      }
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
    terminal_height_.assign(static_cast<std::size_t>(curve_count()), std::vector<int>(2, 0));
    basepoint_order_.clear();
    for (std::size_t h = 0; h < t; ++h) {
      const Endpoint& e = arcs[idx[h]];
      terminal_height_[static_cast<std::size_t>(e.curve)][static_cast<std::size_t>(e.crossing)] =
          static_cast<int>(h);
      basepoint_order_.push_back(GateSlot{e.curve, e.crossing});
    }
  }

  void ArcSystem::order_gates() {
    const int n = rank_.value();
    gate_orders_.assign(static_cast<std::size_t>(n), {});
    for (int c = 0; c < curve_count(); ++c) {
      for (std::size_t k = 0; k < word(c).size(); ++k) {
        gate_orders_[static_cast<std::size_t>(word(c)[k].index - 1)].push_back(
            GateSlot{c, static_cast<int>(k)});
      }
    }
    for (auto& slots : gate_orders_) {
      // Whether a lies nearer the puncture than b. On the lower side the
      // far end comes first, on the upper side the puncture end. When the
      // two sides disagree the strands cross once somewhere along their
      // common run, and every gate of the run has to agree on where; we
      // put the crossing past the middle, i.e. each gate follows the end
      // of the run nearest to it.
      merge_sort(slots, [this](const GateSlot& a, const GateSlot& b) {
        int dl = 0;
        int du = 0;
        const bool near_lower = !precedes(gate_point(a.curve, a.crossing, Side::Lower),
                                          gate_point(b.curve, b.crossing, Side::Lower), true, &dl);
        const bool near_upper = precedes(gate_point(a.curve, a.crossing, Side::Upper),
                                         gate_point(b.curve, b.crossing, Side::Upper), true, &du);
        if (near_lower == near_upper) return near_lower;
        return du < dl ? near_upper : near_lower;
      });
    }
    rank_in_gate_.assign(static_cast<std::size_t>(curve_count()), {});
    for (int c = 0; c < curve_count(); ++c) {
      rank_in_gate_[static_cast<std::size_t>(c)].assign(word(c).size(), 0);
    }
    for (const auto& slots : gate_orders_) {
      for (std::size_t r = 0; r < slots.size(); ++r) {
        rank_in_gate_[static_cast<std::size_t>(slots[r].curve)]
                     [static_cast<std::size_t>(slots[r].crossing)] = static_cast<int>(r);
      }
    }
  }

  void ArcSystem::assign_coordinates() {
    const int n = rank_.value();
    block_base_.assign(static_cast<std::size_t>(2 * n + 1), 0);
    int next = 2 * curve_count();
    for (int j = 1; j <= n; ++j) {
      const int k = static_cast<int>(gate_orders_[static_cast<std::size_t>(j - 1)].size());
      block_base_[static_cast<std::size_t>(2 * j - 1)] = next;
      next += k;
      block_base_[static_cast<std::size_t>(2 * j)] = next;
      next += k;
    }
    boundary_size_ = next;
    lo_.assign(static_cast<std::size_t>(curve_count()), {});
    hi_.assign(static_cast<std::size_t>(curve_count()), {});
    for (int c = 0; c < curve_count(); ++c) {
      for (int i = 0; i < chord_count(c); ++i) {
        int a = coordinate(chord_start(c, i));
        int b = coordinate(chord_end(c, i));
        lo_[static_cast<std::size_t>(c)].push_back(std::min(a, b));
        hi_[static_cast<std::size_t>(c)].push_back(std::max(a, b));
      }
    }
  }

  int ArcSystem::coordinate(const Endpoint& e) const {
    if (e.terminal) {
      return cluster_position(e);
    }
    const int r = rank_in_gate_[static_cast<std::size_t>(e.curve)][static_cast<std::size_t>(e.crossing)];
    const int k = static_cast<int>(gate_orders_[static_cast<std::size_t>(e.gate - 1)].size());
    if (e.side == Side::Lower) {
      return block_base_[static_cast<std::size_t>(2 * e.gate - 1)] + (k - 1 - r);
    }
    return block_base_[static_cast<std::size_t>(2 * e.gate)] + r;
  }

  std::vector<std::vector<int>> ArcSystem::gate_orders_of(int c) const {
    std::vector<std::vector<int>> out(gate_orders_.size());
    for (std::size_t j = 0; j < gate_orders_.size(); ++j) {
      for (const GateSlot& s : gate_orders_[j]) {
        if (s.curve == c) out[j].push_back(s.crossing);
      }
    }
    return out;
  }

  std::int64_t ArcSystem::crossing_count(int c1, int c2) const {
    if (c1 == c2) {
      return simd::count_interleavings(chord_lo(c1), chord_hi(c1));
    }
    return simd::count_cross_interleavings(chord_lo(c1), chord_hi(c1), chord_lo(c2), chord_hi(c2));
  }

  std::vector<IntersectionWitness> ArcSystem::crossings(int c1, int c2) const {
    std::vector<IntersectionWitness> out;
    auto lo1 = chord_lo(c1);
    auto hi1 = chord_hi(c1);
    auto lo2 = chord_lo(c2);
    auto hi2 = chord_hi(c2);
    for (std::size_t i = 0; i < lo1.size(); ++i) {
      for (std::size_t j = (c1 == c2 ? i + 1 : 0); j < lo2.size(); ++j) {
        if (chords_cross(lo1[i], hi1[i], lo2[j], hi2[j])) {
          out.push_back(IntersectionWitness{static_cast<int>(i), static_cast<int>(j)});
        }
      }
    }
    return out;
  }

  std::vector<ChordEvent> ArcSystem::events_along(int c, int i) const {
    const int len = boundary_size_;
    const int s = coordinate(chord_start(c, i));
    const int e = coordinate(chord_end(c, i));
    const int span = ((e - s) % len + len) % len;
    auto forward = [&](int x) { return ((x - s) % len + len) % len; };
    const auto lo = chord_lo(c)[static_cast<std::size_t>(i)];
    const auto hi = chord_hi(c)[static_cast<std::size_t>(i)];
    std::vector<std::pair<int, ChordEvent>> keyed;
    for (int c2 = 0; c2 < curve_count(); ++c2) {
      for (int i2 = 0; i2 < chord_count(c2); ++i2) {
        if (c2 == c && i2 == i) continue;
        const auto a = chord_lo(c2)[static_cast<std::size_t>(i2)];
        const auto b = chord_hi(c2)[static_cast<std::size_t>(i2)];
        if (!chords_cross(lo, hi, a, b)) continue;
        // Exactly one endpoint lies on the boundary arc running forward
        // from the chord's start to its end; chords crossing this one that
        // are disjoint from each other reach it in that boundary order.
        const int fa = forward(a);
        const int key = (fa > 0 && fa < span) ? fa : forward(b);
        keyed.push_back({key, ChordEvent{c2, i2}});
      }
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<ChordEvent> out;
    out.reserve(keyed.size());
    for (const auto& [key, ev] : keyed) out.push_back(ev);
    return out;
  }

}  // namespace ncg::detail
