#include <doctest.h>

#include <random>
#include <set>

#include "building/region.hpp"
#include "group/datum.hpp"

using namespace a2ck;
using namespace a2ck::building;

namespace {

const group::GroupEngine& eng() {
  static auto e = group::GroupEngine::build(group::preset_datum("paper-q2"));
  return e;
}

const ChamberBall& ball() {
  static auto b = ChamberBall::build(eng(), 9);
  return b;
}

}  // namespace

TEST_CASE("a single-cell region anchored at a chamber embeds its residue structure") {
  // one lower chamber only: exactly the anchor itself
  RegionSpec spec;
  spec.base_type = 0;
  spec.slots = {{0, 0, false}};
  auto embs = enumerate_flat(ball(), spec, {{{0, 0, false}, 0}});
  REQUIRE(embs.size() == 1);
  CHECK(embs[0][0] == 0);
}

TEST_CASE("tiles anchored at the identity chamber: q^5 per base type") {
  for (int t = 0; t < 3; ++t) {
    auto spec = rect_region(2, 2, t);
    auto embs = enumerate_flat(ball(), spec, {{{0, 0, false}, 0}});
    CHECK(embs.size() == 32);
    // all embeddings distinct and deterministically ordered
    for (std::size_t k = 1; k < embs.size(); ++k) CHECK(embs[k - 1] < embs[k]);
  }
}

TEST_CASE("hexagons with a fixed up chamber: q^3 per type, disjoint across types") {
  std::set<std::array<std::uint32_t, 6>> all;
  for (int t = 0; t < 3; ++t) {
    auto hx = hexagons_with_up(ball(), 0, t);
    CHECK(hx.size() == 8);
    for (const auto& h : hx) {
      CHECK(h.up() == 0);
      std::array<std::uint32_t, 6> sorted = h.chambers;
      std::sort(sorted.begin(), sorted.end());
      CHECK(all.insert(sorted).second);  // distinct across all types
    }
  }
}

TEST_CASE("each hexagon is recovered once per designated up chamber") {
  auto hx = hexagons_with_up(ball(), 0, 1);
  REQUIRE(!hx.empty());
  const auto& h = hx.front();
  std::multiset<std::uint32_t> target(h.chambers.begin(), h.chambers.end());
  int hits = 0;
  for (std::uint32_t c : h.chambers) {
    for (const auto& h2 : hexagons_with_up(ball(), c, 1)) {
      std::multiset<std::uint32_t> got(h2.chambers.begin(), h2.chambers.end());
      if (got == target) {
        ++hits;
        CHECK(h2.up() == c);
      }
    }
  }
  CHECK(hits == 6);
}

TEST_CASE("a tile contains q^2 extensions of its central hexagon") {
  // fix a hexagon, count tiles whose middle is that hexagon
  auto hx = hexagons_with_up(ball(), 0, 0);
  REQUIRE(!hx.empty());
  const auto& h = hx.front();
  auto spec = rect_region(2, 2, 0);
  std::vector<std::pair<Slot, std::uint32_t>> anchor;
  auto pos = hexagon_positions(0, 0);
  for (int k = 0; k < 6; ++k) anchor.emplace_back(pos[k], h.chambers[k]);
  auto embs = enumerate_flat(ball(), spec, anchor);
  CHECK(embs.size() == 4);
}

TEST_CASE("orbit keys start at the identity and are translation invariant") {
  auto spec = rect_region(2, 2, 1);
  auto embs = enumerate_flat(ball(), spec, {{{0, 0, false}, 0}});
  REQUIRE(embs.size() == 32);
  const auto& syms = eng().symbols();

  auto key0 = tile_key(ball(), spec, embs[0], 0, 0);
  CHECK(key0.words[0].empty());  // initial chamber translates to e
  CHECK(key0.type == 1);

  // translate a tile by 50 random short group elements and re-key
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    group::Word g;
    for (int k = 0; k < 3; ++k) g.push_back(static_cast<char>(rng() % 6));
    g = eng().normal_form(g);
    const auto& emb = embs[trial % embs.size()];
    Embedding moved;
    bool inside = true;
    for (auto c : emb) {
      auto j = ball().find(eng().mul(g, ball().word(c)));
      if (j < 0 || ball().dist(static_cast<std::uint32_t>(j)) > ball().radius() - 2) {
        inside = false;
        break;
      }
      moved.push_back(static_cast<std::uint32_t>(j));
    }
    if (!inside) continue;
    ++checked;
    auto k1 = tile_key(ball(), spec, emb, 0, 0);
    auto k2 = tile_key(ball(), spec, moved, 0, 0);
    CHECK(k1.str(syms) == k2.str(syms));
  }
  CHECK(checked > 10);
}

TEST_CASE("keys separate base vertex types") {
  std::set<std::string> seen;
  const auto& syms = eng().symbols();
  for (int t = 0; t < 3; ++t) {
    auto spec = rect_region(2, 2, t);
    for (const auto& emb : enumerate_flat(ball(), spec, {{{0, 0, false}, 0}})) {
      auto k = tile_key(ball(), spec, emb, 0, 0);
      CHECK(k.type == t);
      CHECK(seen.insert(k.str(syms)).second);
    }
  }
  CHECK(seen.size() == 96);
}

TEST_CASE("enumeration rejects regions that reach the boundary shell") {
  auto small = ChamberBall::build(eng(), 4);
  auto spec = rect_region(2, 2, 0);
  CHECK_THROWS_AS((void)enumerate_flat(small, spec, {{{0, 0, false}, 0}}), Error);
}

TEST_CASE("anchors must belong to the region") {
  auto spec = rect_region(2, 2, 0);
  CHECK_THROWS_AS((void)enumerate_flat(ball(), spec, {{{5, 5, false}, 0}}), Error);
  CHECK_THROWS_AS((void)enumerate_flat(ball(), spec, {}), Error);
}
