#pragma once

#include <string>
#include <vector>

#include "building/ball.hpp"

namespace a2ck::building {

// Bipartite incidence graph at a vertex of type t: one side the cosets of
// the panel subgroup for pair {t,t+1} inside the vertex residue (points),
// the other the cosets for pair {t-1,t} (lines). Each chamber of the
// residue is one edge. For a valid datum this is the incidence graph of a
// projective plane of order q.
struct LinkGraph {
  std::vector<Word> points, lines;                       // canonical coset keys
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (point, line) per chamber
};

LinkGraph vertex_link(const ChamberBall& ball, std::uint32_t ci, int t);

struct LinkReport {
  bool pass = false;
  int points = 0, lines = 0, girth = 0, diameter = 0;
  bool biregular = false, connected = false, simple = false;
  std::string detail;  // counterexample walk / first violated property
};

// Projective-plane checks: q^2+q+1 nodes per side, (q+1)-biregular, simple,
// connected, girth 6, diameter 3.
LinkReport validate_link(const LinkGraph& g, int q);

}  // namespace a2ck::building
