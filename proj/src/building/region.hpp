#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "building/ball.hpp"

namespace a2ck::building {

// Model regions live on the triangular lattice of an apartment. The lattice
// vertex v_{kl} has type (base_type + k - l) mod 3. Cell (i,j) carries two
// chambers:
//   lower(i,j) = {v_{i,j},   v_{i+1,j}, v_{i,j+1}}
//   upper(i,j) = {v_{i+1,j}, v_{i,j+1}, v_{i+1,j+1}}
// A region is a set of such chamber slots; the scan order (j outer, i inner,
// lower before upper) is the canonical order for keys and output.
struct Slot {
  std::int8_t i = 0, j = 0;
  bool upper = false;
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot& a, const Slot& b) {
    return std::tuple(a.j, a.i, a.upper) <=> std::tuple(b.j, b.i, b.upper);
  }
};

struct RegionSpec {
  std::vector<Slot> slots;  // held in scan order
  int base_type = 0;
};

// Parallelogram of shape (m,n): all 2mn chamber slots.
RegionSpec rect_region(int m, int n, int base_type);
// The six chambers around the central vertex v_{11} of a (2,2) tile.
RegionSpec hexagon_region(int base_type);
// Two overlapping hexagons sharing exactly two chambers: the second hexagon
// sits around v_{21} (direction 1) or v_{12} (direction 2). 10 slots.
RegionSpec hexagon_pair_region(int direction, int base_type);

// Chamber positions of a hexagon around v_{oi+1,oj+1}, listed positionally:
// up, opposite-of-up, then the remaining two antipodal pairs in type order
// (for central type k: [x_k, xbar_k, x_{k+1}, xbar_{k+1}, x_{k+2}, xbar_{k+2}]).
std::array<Slot, 6> hexagon_positions(int oi, int oj);

// A flat image of a model region in the ball: chamber index per scan slot.
using Embedding = std::vector<std::uint32_t>;

// Enumerates all flat embeddings extending the anchor (slot -> chamber).
// Placement walks the scan order restricted to constraint-connected slots;
// every placement is checked against the typed panel adjacencies of the
// model and the no-folding conditions (all chambers around a shared lattice
// vertex distinct, image globally injective). Chambers are kept two gallery
// steps clear of the ball shell; violating that throws Errc::truncated
// ("ball too small").
std::vector<Embedding> enumerate_flat(const ChamberBall& ball, const RegionSpec& spec,
                                      const std::vector<std::pair<Slot, std::uint32_t>>& anchor);

// Orbit key of an embedded region under the free chamber-regular action:
// left-translate by the inverse of the designated initial chamber and record
// the normal forms in a canonical slot order. Regions are translates of each
// other iff their keys agree.
struct OrbitKey {
  int type = 0;
  std::vector<Word> words;
  friend bool operator==(const OrbitKey&, const OrbitKey&) = default;
  friend bool operator<(const OrbitKey& a, const OrbitKey& b) {
    return std::tie(a.type, a.words) < std::tie(b.type, b.words);
  }
  std::string str(const group::SymbolTable& syms) const;
};

// Key of the (2,2) sub-tile of `spec` whose base cell is (oi,oj); the
// initial chamber is lower(oi,oj) and the key type is the type of v_{oi,oj}.
OrbitKey tile_key(const ChamberBall& ball, const RegionSpec& spec, const Embedding& emb,
                  int oi, int oj);

// Key of the hexagon around v_{oi+1,oj+1}: initial chamber is the up chamber,
// slots in positional order, key type = central vertex type.
OrbitKey hexagon_key(const ChamberBall& ball, const RegionSpec& spec, const Embedding& emb,
                     int oi, int oj);

// A hexagon with its positional chamber labels.
struct Hexagon {
  int type = 0;                            // central vertex type
  std::array<std::uint32_t, 6> chambers{}; // positional order as above
  std::uint32_t up() const { return chambers[0]; }
};

// The q^3 hexagons of central type t whose up chamber is c.
std::vector<Hexagon> hexagons_with_up(const ChamberBall& ball, std::uint32_t c, int t);

}  // namespace a2ck::building
