#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "building/region.hpp"

namespace a2ck::shift {

using building::ChamberBall;
using building::Embedding;
using building::OrbitKey;

// Alphabet of orbit keys (tiles or hexagons), sorted, with the partition
// into type blocks. Keys are grouped by type: block t occupies
// [blocks[t].first, blocks[t].second). Each entry keeps its anchored
// representative embedding (initial chamber at the identity) for the
// transition-matrix construction.
struct Alphabet {
  enum class Kind { tile, hexagon };
  Kind kind = Kind::tile;
  int q = 0;
  std::vector<OrbitKey> keys;  // sorted
  std::vector<Embedding> reps;
  std::array<std::pair<std::uint32_t, std::uint32_t>, 3> blocks{};
  std::unordered_map<std::string, std::uint32_t> index;  // key string -> position

  std::uint32_t size() const { return static_cast<std::uint32_t>(keys.size()); }
  int type_of(std::uint32_t a) const { return keys[a].type; }
  std::uint32_t find(const OrbitKey& k, const group::SymbolTable& syms) const;
};

// Orbits of tiles: anchored enumeration of (2,2) regions with initial
// chamber at the identity, one block per base vertex type. Hard failure if
// any block differs from q^5.
Alphabet build_tile_alphabet(const ChamberBall& ball);

// Orbits of hexagons (reduced tiles): anchored with up chamber at the
// identity; q^3 per central type, hard failure otherwise.
Alphabet build_hexagon_alphabet(const ChamberBall& ball);

}  // namespace a2ck::shift
