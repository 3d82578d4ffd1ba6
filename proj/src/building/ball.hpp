#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <vector>

#include "group/engine.hpp"

namespace a2ck::building {

using group::GroupEngine;
using group::Word;

// A finite ball of the chamber system: chambers are group elements within
// gallery radius R of the identity, discovered by breadth-first closure under
// right multiplication by panel elements. Index order is the BFS discovery
// order, which is deterministic and reproduced bit-for-bit by cache reloads.
class ChamberBall {
 public:
  static ChamberBall build(const GroupEngine& eng, int radius);

  // Cache round-trip. Chamber indices and adjacency are reproduced exactly.
  void save(std::ostream& out) const;
  static ChamberBall load(const GroupEngine& eng, std::istream& in);

  const GroupEngine& engine() const { return *eng_; }
  int radius() const { return radius_; }
  int q() const { return eng_->q(); }
  std::uint32_t size() const { return static_cast<std::uint32_t>(chambers_.size()); }
  const Word& word(std::uint32_t ci) const { return chambers_[ci]; }
  int dist(std::uint32_t ci) const { return dist_[ci]; }

  // Index of a normal-form word, or -1 if outside the ball.
  std::int64_t find(const Word& nf) const;

  // The q other chambers of ci's type-pair-p residue; -1 entries where the
  // residue crosses the ball boundary.
  std::span<const std::int32_t> neighbors(std::uint32_t ci, int p) const {
    return {adj_.data() + (static_cast<std::size_t>(ci) * 3 + p) * q(),
            static_cast<std::size_t>(q())};
  }
  bool adjacent(std::uint32_t a, std::uint32_t b, int p) const {
    for (std::int32_t n : neighbors(a, p))
      if (n == static_cast<std::int32_t>(b)) return true;
    return false;
  }

  // Canonical key (shortlex-min coset member) of the type-t vertex of ci.
  Word vertex_key(std::uint32_t ci, int t) const;
  // All ball chambers containing that vertex; throws Errc::truncated when the
  // residue is cut off by the ball boundary.
  std::vector<std::uint32_t> chambers_at(std::uint32_t ci, int t) const;

 private:
  const GroupEngine* eng_ = nullptr;
  int radius_ = 0;
  std::vector<Word> chambers_;
  std::vector<std::uint16_t> dist_;
  std::vector<std::int32_t> adj_;  // size() * 3 * q
  std::unordered_map<Word, std::uint32_t> index_;

  void fill_adjacency_and_validate();
};

// Vertex cosets of all ball chambers, deduplicated by canonical key.
// interior == the full (q+1)(q^2+q+1)-chamber residue lies inside the ball.
struct VertexIndex {
  struct Vertex {
    Word key;
    int type;
    std::vector<std::uint32_t> members;  // ball chambers containing it
    bool interior;
  };
  std::vector<Vertex> verts;
  std::vector<std::array<std::int32_t, 3>> of_chamber;  // chamber -> vertex id per type

  static VertexIndex build(const ChamberBall& ball);
};

}  // namespace a2ck::building
