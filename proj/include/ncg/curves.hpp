#pragma once

// Combinatorial curve engine for based loops in the n-punctured disk.
//
// Model: the basepoint x_0 sits on the left of the boundary circle, the
// punctures x_1..x_n lie bottom-to-top on the vertical diameter, and gate j
// is the segment from x_j to the rightmost boundary point. Cutting the disk
// along the gates leaves a polygon; a loop with reduced crossing word w is a
// family of chords of that polygon, one between any two consecutive gate
// crossings plus two chords ending at x_0. Chords with four distinct
// boundary endpoints meet iff their endpoints interleave, so a loop (or a
// pair of loops) is determined up to isotopy by the order of its crossing
// points along each gate.
//
// Gate orders are computed by comparing what lies beyond two strands: both
// are followed in parallel through the polygon until they part, and the
// parting place fixes their relative order. This is the combinatorial
// counterpart of taking geodesic representatives, and realizes minimal self
// and mutual intersection numbers.

#include <string>
#include <vector>

#include "ncg/words.hpp"

namespace ncg {

  // A transverse intersection between chord `first` and chord `second`.
  // Chord i of a curve with m crossings joins crossing i-1 to crossing i;
  // chord 0 leaves x_0 and chord m returns to it.
  struct IntersectionWitness {
    int first = 0;
    int second = 0;
    friend bool operator==(const IntersectionWitness&, const IntersectionWitness&) = default;
  };

  // An occurrence of a gate crossing: crossing `crossing` of curve `curve`.
  struct GateSlot {
    int curve = 0;
    int crossing = 0;
    friend bool operator==(const GateSlot&, const GateSlot&) = default;
  };

  class TautCurve {
   public:
    TautCurve(Rank rank, FreeWord word, std::vector<std::vector<int>> gate_orders,
              std::vector<IntersectionWitness> witnesses, bool out_below_in);

    Rank rank() const noexcept { return rank_; }
    const FreeWord& word() const noexcept { return word_; }
    // gate_orders()[j-1] lists the crossings through gate j, puncture end first.
    const std::vector<std::vector<int>>& gate_orders() const noexcept { return gate_orders_; }
    int self_intersections() const noexcept { return static_cast<int>(witnesses_.size()); }
    const std::vector<IntersectionWitness>& witnesses() const noexcept { return witnesses_; }
    bool embedded() const noexcept { return witnesses_.empty(); }
    // Whether the outgoing arc leaves x_0 below the returning one.
    bool out_below_in() const noexcept { return out_below_in_; }

    friend bool operator==(const TautCurve&, const TautCurve&) = default;

   private:
    Rank rank_;
    FreeWord word_;
    std::vector<std::vector<int>> gate_orders_;
    std::vector<IntersectionWitness> witnesses_;
    bool out_below_in_;
  };

  // Two loops drawn in one diagram with minimal mutual intersection.
  struct PairDiagram {
    TautCurve first;
    TautCurve second;
    // Merged gate orders, puncture end first.
    std::vector<std::vector<GateSlot>> gate_orders;
    // The four arcs at x_0 from bottom to top, as (curve, 0 = outgoing / 1 = returning).
    std::vector<GateSlot> basepoint_order;
    // first = chord of `first`, second = chord of `second`.
    std::vector<IntersectionWitness> mutual;

    int mutual_intersections() const noexcept { return static_cast<int>(mutual.size()); }
  };

  TautCurve realize(const FreeWord& a, Rank rank);

  // Represented by an embedded, positively oriented loop in the punctured
  // plane (the set NC). The identity counts as the bottom element.
  bool is_noncrossing(const FreeWord& a, Rank rank);

  // Represented by an embedded positively oriented loop inside the disk,
  // i.e. a divisor of g = f_1 ... f_n (the set NC_g).
  bool is_nc_divisor(const FreeWord& a, Rank rank);

  // Punctures enclosed by an embedded loop. Throws NotEmbedded.
  std::vector<int> interior(const TautCurve& c);

  // Throws NotNonCrossing unless both inputs are in NC.
  PairDiagram mutual_tighten(const FreeWord& a, const FreeWord& b, Rank rank);

  // small ⊆ big for non-crossing elements. Throws NotNonCrossing.
  bool contains(const FreeWord& big, const FreeWord& small, Rank rank);

  // Lattice operations on NC_g. Throw NotNonCrossing / NotDivisor.
  FreeWord nc_join(const FreeWord& a, const FreeWord& b, Rank rank);
  FreeWord nc_meet(const FreeWord& a, const FreeWord& b, Rank rank);

  std::string render_svg(const TautCurve& curve);
  std::string render_svg(const PairDiagram& diagram);

}  // namespace ncg
