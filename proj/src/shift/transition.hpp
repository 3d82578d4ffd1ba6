#pragma once

#include <cstdint>
#include <vector>

#include "shift/alphabet.hpp"

namespace a2ck::shift {

// Square 0/1 matrix indexed by an alphabet. Entry (b,a) reads "a extends to
// b one step in the given lattice direction".
struct ZeroOneMatrix {
  std::uint32_t n = 0;
  std::vector<std::uint8_t> a;

  explicit ZeroOneMatrix(std::uint32_t dim = 0) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}
  std::uint8_t& at(std::uint32_t r, std::uint32_t c) { return a[static_cast<std::size_t>(r) * n + c]; }
  std::uint8_t at(std::uint32_t r, std::uint32_t c) const {
    return a[static_cast<std::size_t>(r) * n + c];
  }
  std::uint64_t row_sum(std::uint32_t r) const;
  std::uint64_t col_sum(std::uint32_t c) const;
  std::uint64_t ones() const;
  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;
};

// Tile transition matrix M_j (j = 1 or 2): entry (b,a) is 1 when the
// anchored representative of a extends to a flat parallelogram of shape
// (3,2) (j=1) or (2,3) (j=2) whose terminal tile has orbit key b. Each row
// and column must carry exactly q^2 ones; violations are hard failures.
ZeroOneMatrix build_transition_tiles(int j, const ChamberBall& ball, const Alphabet& A);

// Hexagon transition matrix N_j from the 10-chamber two-hexagon regions
// (two hexagons sharing exactly two chambers, the second at the higher
// level in direction j). Rows and columns again sum to q^2.
ZeroOneMatrix build_transition_hex(int j, const ChamberBall& ball, const Alphabet& L);

// Entrywise block-structure check: columns in block i may only carry ones in
// rows of block i+j (mod 3).
bool block_structure_ok(const ZeroOneMatrix& M, const Alphabet& A, int j);

}  // namespace a2ck::shift
