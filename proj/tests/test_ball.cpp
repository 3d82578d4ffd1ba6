#include <doctest.h>

#include <set>
#include <sstream>

#include "building/ball.hpp"
#include "building/link.hpp"
#include "group/datum.hpp"

using namespace a2ck;
using namespace a2ck::building;

namespace {

const group::GroupEngine& eng() {
  static auto e = group::GroupEngine::build(group::preset_datum("paper-q2"));
  return e;
}

const ChamberBall& ball7() {
  static auto b = ChamberBall::build(eng(), 7);
  return b;
}

}  // namespace

TEST_CASE("radius 0 ball is the identity chamber") {
  auto b = ChamberBall::build(eng(), 0);
  CHECK(b.size() == 1);
  CHECK(b.word(0).empty());
}

TEST_CASE("ball growth follows the regular chamber system") {
  auto b = ChamberBall::build(eng(), 4);
  // level sizes computed independently by closure enumeration
  // (1, 6, 24, 72, 192 chambers at radii 0..4)
  std::array<std::uint32_t, 5> cum{1, 7, 31, 103, 295};
  std::array<std::uint32_t, 5> got{};
  for (std::uint32_t c = 0; c < b.size(); ++c)
    for (int r = b.dist(c); r < 5; ++r) ++got[r];
  for (int r = 0; r < 5; ++r) CHECK(got[r] == cum[r]);
  // every chamber strictly inside the shell has 3 panels x q neighbors
  for (std::uint32_t c = 0; c < b.size(); ++c) {
    if (b.dist(c) >= 4) continue;
    int n = 0;
    for (int p = 0; p < 3; ++p)
      for (auto x : b.neighbors(c, p))
        if (x >= 0) ++n;
    CHECK(n == 6);
  }
  // the 21-chamber vertex residue sits fully inside a radius-4 ball
  CHECK(b.chambers_at(0, 0).size() == 21);
}

TEST_CASE("vertices are cosets with canonical keys") {
  const auto& b = ball7();
  // A vertex is the pair (type, coset key); the identity chamber's three
  // vertices all have key e (the identity lies in every H_t coset), so they
  // are separated by type, and their chamber sets are pairwise different.
  for (int t = 0; t < 3; ++t) CHECK(b.vertex_key(0, t).empty());
  auto c0 = b.chambers_at(0, 0);
  auto c1 = b.chambers_at(0, 1);
  auto c2 = b.chambers_at(0, 2);
  CHECK(c0 != c1);
  CHECK(c1 != c2);
  CHECK(c0 != c2);
  // away from the identity the keys themselves separate the three types
  std::uint32_t far = 0;
  for (std::uint32_t c = 0; c < b.size(); ++c)
    if (b.dist(c) == 3) far = c;
  std::set<std::pair<int, group::Word>> keys;
  for (int t = 0; t < 3; ++t) keys.insert({t, b.vertex_key(far, t)});
  CHECK(keys.size() == 3);
  // vertex_of(e, t) = vertex_of(h, t) for every h in H_t
  for (int t = 0; t < 3; ++t) {
    for (const auto& h : eng().vertex_group(t)) {
      auto ci = b.find(h);
      REQUIRE(ci >= 0);
      CHECK(b.vertex_key(static_cast<std::uint32_t>(ci), t) == b.vertex_key(0, t));
    }
  }
  CHECK(b.chambers_at(0, 0).size() == 21);
  // a shell chamber has truncated residues
  std::uint32_t shell = 0;
  for (std::uint32_t c = 0; c < b.size(); ++c)
    if (b.dist(c) == 7) shell = c;
  CHECK_THROWS_AS((void)b.chambers_at(shell, 0), Error);
}

TEST_CASE("links of interior vertices are projective planes of order 2") {
  const auto& b = ball7();
  auto g = vertex_link(b, 0, 0);
  auto rep = validate_link(g, 2);
  CHECK(rep.pass);
  CHECK(rep.points == 7);
  CHECK(rep.lines == 7);
  CHECK(rep.girth == 6);
  CHECK(rep.diameter == 3);
}

TEST_CASE("a 6-cycle is not a projective plane incidence graph") {
  LinkGraph g;
  for (int k = 0; k < 3; ++k) {
    g.points.push_back(group::Word(1, static_cast<char>(k)));
    g.lines.push_back(group::Word(1, static_cast<char>(k)));
  }
  g.edges = {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}};
  auto rep = validate_link(g, 2);
  CHECK_FALSE(rep.pass);
  CHECK(rep.detail.find("nodes") != std::string::npos);
}

TEST_CASE("every interior vertex of a radius-6 ball validates") {
  auto b = ChamberBall::build(eng(), 6);
  auto vi = VertexIndex::build(b);
  int interior = 0;
  for (const auto& v : vi.verts) {
    if (!v.interior) continue;
    ++interior;
    auto rep = validate_link(vertex_link(b, v.members.front(), v.type), 2);
    CHECK(rep.pass);
  }
  CHECK(interior > 0);
}

TEST_CASE("cache round-trip reproduces indices exactly") {
  const auto& b = ball7();
  std::stringstream ss;
  b.save(ss);
  auto b2 = ChamberBall::load(eng(), ss);
  REQUIRE(b2.size() == b.size());
  for (std::uint32_t c = 0; c < b.size(); ++c) {
    CHECK(b2.word(c) == b.word(c));
    CHECK(b2.dist(c) == b.dist(c));
    for (int p = 0; p < 3; ++p) {
      auto x = b.neighbors(c, p);
      auto y = b2.neighbors(c, p);
      CHECK(std::equal(x.begin(), x.end(), y.begin()));
    }
  }
}

TEST_CASE("radius guard applies to bounded-confluence systems only") {
  // the preset completes, so huge radii are legal in principle (not built
  // here); a bounded system rejects radii past the certified budget
  auto d = group::preset_datum("paper-q2");
  try {
    auto rs = group::RewriteSystem::complete(d.symbols.num_symbols(), d.relators, 30, 14,
                                             d.symbols);
    if (rs.status() == group::RewriteSystem::Status::bounded_confluent) {
      // safe length 7 with panel elements of length 1 allows radius <= 7
      // (cannot build an engine around a starved system here; the guard is
      // exercised through the ball construction path in pipeline tests)
      CHECK(rs.safe_element_length() == 7);
    }
  } catch (const Error&) {
    // starved completion may legitimately report an unresolved overlap
  }
}
