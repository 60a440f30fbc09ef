#pragma once

// Chord diagram of one or two based loops in the cut-open disk.
//
// Boundary blocks, in counter-clockwise order: block 0 holds the arcs at the
// basepoint (top to bottom), then for j = 1..n block 2j-1 is the lower side
// of gate j (far end first) and block 2j its upper side (puncture end first).

#include <cstdint>
#include <span>
#include <vector>

#include "ncg/curves.hpp"
#include "ncg/words.hpp"

namespace ncg::detail {

  enum class Side : std::uint8_t { Lower = 0, Upper = 1 };

  struct Endpoint {
    bool terminal = false;
    int curve = 0;
    // Crossing index for gate points; 0 = outgoing, 1 = returning for terminals.
    int crossing = 0;
    int gate = 0;
    Side side = Side::Lower;

    int block() const noexcept {
      return terminal ? 0 : 2 * gate - 1 + (side == Side::Upper ? 1 : 0);
    }
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
  };

  struct ChordEvent {
    int curve = 0;
    int chord = 0;
  };

  class ArcSystem {
   public:
    // out_below_in[c] fixes how curve c leaves and re-enters the basepoint.
    ArcSystem(Rank rank, std::vector<FreeWord> words, std::vector<bool> out_below_in);

    Rank rank() const noexcept { return rank_; }
    int curve_count() const noexcept { return static_cast<int>(words_.size()); }
    const FreeWord& word(int c) const { return words_[static_cast<std::size_t>(c)]; }
    int chord_count(int c) const { return static_cast<int>(word(c).size()) + 1; }
    bool out_below_in(int c) const { return out_below_in_[static_cast<std::size_t>(c)]; }

    Endpoint chord_start(int c, int i) const;
    Endpoint chord_end(int c, int i) const;

    // Merged gate orders, puncture end first.
    const std::vector<std::vector<GateSlot>>& gate_orders() const noexcept { return gate_orders_; }
    // Gate orders of one curve only.
    std::vector<std::vector<int>> gate_orders_of(int c) const;
    // Basepoint arcs bottom to top, as (curve, 0 = outgoing / 1 = returning).
    const std::vector<GateSlot>& basepoint_order() const noexcept { return basepoint_order_; }
    int basepoint_height(int c, int which) const;

    int coordinate(const Endpoint& e) const;
    int boundary_size() const noexcept { return boundary_size_; }
    std::span<const std::int32_t> chord_lo(int c) const { return lo_[static_cast<std::size_t>(c)]; }
    std::span<const std::int32_t> chord_hi(int c) const { return hi_[static_cast<std::size_t>(c)]; }

    std::int64_t crossing_count(int c1, int c2) const;
    // All crossing chord pairs; for c1 == c2 each unordered pair once.
    std::vector<IntersectionWitness> crossings(int c1, int c2) const;
    // Chords crossing chord (c, i), ordered from its start to its end.
    std::vector<ChordEvent> events_along(int c, int i) const;

   private:
    Endpoint gate_point(int c, int k, Side side) const;
    Side incoming_side(int c, int k) const;
    Endpoint far(const Endpoint& p) const;
    static Endpoint reflect(const Endpoint& p);
    int cyclic_offset(int block, int from) const noexcept;
    // Whether p precedes q in their common boundary block, forced by
    // non-crossing of the strands beyond them.
    // `steps`, if given, receives the number of shared gates passed first.
    bool precedes(Endpoint p, Endpoint q, bool basepoint_known, int* steps = nullptr) const;
    int cluster_position(const Endpoint& t) const;

    void order_basepoint();
    void order_gates();
    void assign_coordinates();

    Rank rank_;
    std::vector<FreeWord> words_;
    std::vector<bool> out_below_in_;
    std::vector<GateSlot> basepoint_order_;
    std::vector<std::vector<int>> terminal_height_;  // [curve][0/1]
    std::vector<std::vector<GateSlot>> gate_orders_;
    std::vector<std::vector<int>> rank_in_gate_;  // [curve][crossing]
    std::vector<int> block_base_;
    int boundary_size_ = 0;
    std::vector<std::vector<std::int32_t>> lo_;
    std::vector<std::vector<std::int32_t>> hi_;
  };

}  // namespace ncg::detail
