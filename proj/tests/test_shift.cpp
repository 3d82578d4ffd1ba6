#include <doctest.h>

#include <sstream>

#include "group/datum.hpp"
#include "pipeline/exports.hpp"
#include "shift/conditions.hpp"

using namespace a2ck;
using namespace a2ck::shift;

namespace {

struct Fixture {
  group::GroupEngine eng = group::GroupEngine::build(group::preset_datum("paper-q2"));
  building::ChamberBall ball = building::ChamberBall::build(eng, 11);
  Alphabet A = build_tile_alphabet(ball);
  Alphabet L = build_hexagon_alphabet(ball);
  ZeroOneMatrix M1 = build_transition_tiles(1, ball, A);
  ZeroOneMatrix M2 = build_transition_tiles(2, ball, A);
  ZeroOneMatrix N1 = build_transition_hex(1, ball, L);
  ZeroOneMatrix N2 = build_transition_hex(2, ball, L);
};

const Fixture& fx() {
  static Fixture f;
  return f;
}

ZeroOneMatrix ident(std::uint32_t n) {
  ZeroOneMatrix m(n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

}  // namespace

TEST_CASE("alphabets have the right sizes and block partitions") {
  const auto& f = fx();
  CHECK(f.A.size() == 96);
  CHECK(f.L.size() == 24);
  for (int t = 0; t < 3; ++t) {
    CHECK(f.A.blocks[t].second - f.A.blocks[t].first == 32);
    CHECK(f.L.blocks[t].second - f.L.blocks[t].first == 8);
  }
  // blocks partition the alphabet and are contiguous by construction
  CHECK(f.A.blocks[0].first == 0);
  CHECK(f.A.blocks[2].second == 96);
  for (std::uint32_t a = 0; a < f.A.size(); ++a) {
    const int t = f.A.type_of(a);
    CHECK(a >= f.A.blocks[t].first);
    CHECK(a < f.A.blocks[t].second);
  }
}

TEST_CASE("transition matrices have q^2 ones per row and column") {
  const auto& f = fx();
  for (const auto* m : {&f.M1, &f.M2}) {
    for (std::uint32_t k = 0; k < 96; ++k) {
      CHECK(m->row_sum(k) == 4);
      CHECK(m->col_sum(k) == 4);
    }
  }
  for (const auto* n : {&f.N1, &f.N2}) {
    for (std::uint32_t k = 0; k < 24; ++k) {
      CHECK(n->row_sum(k) == 4);
      CHECK(n->col_sum(k) == 4);
    }
  }
  CHECK(f.M1.ones() == 384);  // 96 rows x 4
  CHECK(f.M2.ones() == 384);
}

TEST_CASE("block structure: direction j advances the type by j") {
  const auto& f = fx();
  CHECK(block_structure_ok(f.M1, f.A, 1));
  CHECK(block_structure_ok(f.M2, f.A, 2));
  CHECK(block_structure_ok(f.N1, f.L, 1));
  CHECK(block_structure_ok(f.N2, f.L, 2));
  CHECK_FALSE(block_structure_ok(f.M1, f.A, 2));
}

TEST_CASE("H1 holds for the preset and detects bad pairs") {
  const auto& f = fx();
  CHECK(verify_H1(f.M1, f.M2).status == CheckStatus::pass);

  auto id = ident(2);
  CHECK(verify_H1(id, id).status == CheckStatus::pass);  // degenerate control

  ZeroOneMatrix ones(2);
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) ones.at(i, j) = 1;
  auto r = verify_H1(ones, ones);  // product has entries 2
  CHECK(r.status == CheckStatus::fail);
}

TEST_CASE("H2 holds for the preset; reducible controls fail") {
  const auto& f = fx();
  CHECK(verify_H2(f.M1, f.M2).status == CheckStatus::pass);

  auto one = ident(1);
  CHECK(verify_H2(one, one).status == CheckStatus::pass);  // single letter loop

  // block-diagonal: two letters, each with only a self-loop
  auto id = ident(2);
  auto r = verify_H2(id, id);
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.observed.find("unreachable") != std::string::npos);
}

TEST_CASE("H3 produces verified witnesses; constant systems are inconclusive") {
  const auto& f = fx();
  std::vector<H3Witness> wits;
  auto r = verify_H3(f.M1, f.M2, 2, 3, &wits);
  CHECK(r.status == CheckStatus::pass);
  CHECK(wits.size() == 24);  // all offsets with |p1|,|p2| <= 2
  for (const auto& w : wits) {
    CHECK(w.word.at(w.i, w.j) != w.word.at(w.i + w.p1, w.j + w.p2));
    // every matrix constraint of the witness word re-verified
    for (int j = 0; j <= w.word.n; ++j)
      for (int i = 0; i <= w.word.m; ++i) {
        if (i > 0) CHECK(f.M1.at(w.word.at(i, j), w.word.at(i - 1, j)) == 1);
        if (j > 0) CHECK(f.M2.at(w.word.at(i, j), w.word.at(i, j - 1)) == 1);
      }
  }
  auto one = ident(1);
  auto rc = verify_H3(one, one, 1, 2);
  CHECK(rc.status == CheckStatus::inconclusive);  // periodic, and never a pass
}

TEST_CASE("matrix word counts match the geometric enumeration") {
  const auto& f = fx();
  CHECK(count_words(f.M1, f.M2, 0, 0) == 96);
  CHECK(count_words(f.M1, f.M2, 1, 0) == 384);
  CHECK(count_words(f.M1, f.M2, 0, 1) == 384);
  CHECK(count_words(f.M1, f.M2, 1, 1) == 96 * 16);
  for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
    auto r = word_count_crosscheck(m, n, f.ball, f.A, f.M1, f.M2);
    CHECK(r.status == CheckStatus::pass);
  }
}

TEST_CASE("matrix export round-trips and is deterministic") {
  const auto& f = fx();
  const auto& syms = f.eng.symbols();
  std::ostringstream o1, o2;
  a2ck::pipeline::write_matrix(o1, "M1", f.M1, f.A, syms);
  a2ck::pipeline::write_matrix(o2, "M1", f.M1, f.A, syms);
  CHECK(o1.str() == o2.str());
  // exactly 384 triplet lines between header and checksum
  {
    std::istringstream count(o1.str());
    std::string line;
    int triplets = 0;
    while (std::getline(count, line))
      if (line.find('\t') != std::string::npos) ++triplets;
    CHECK(triplets == 384);
  }
  std::istringstream in(o1.str());
  auto back = a2ck::pipeline::read_matrix(in, f.A);
  CHECK(back == f.M1);

  std::ostringstream oa;
  a2ck::pipeline::write_alphabet(oa, f.A, syms);
  CHECK(oa.str().find("n=96") != std::string::npos);
  std::istringstream ain(oa.str());
  auto afile = a2ck::pipeline::read_alphabet(ain);
  CHECK(afile.kind == "tile");
  CHECK(afile.q == 2);
  REQUIRE(afile.keys.size() == 96);
  for (std::uint32_t i = 0; i < 96; ++i) {
    CHECK(afile.keys[i].first == f.A.type_of(i));
    CHECK(afile.keys[i].second == f.A.keys[i].str(syms));
  }
  for (int t = 0; t < 3; ++t) CHECK(afile.block_sizes[t] == 32);
}

TEST_CASE("rebuilding matrices from a cache reload is bit-identical") {
  const auto& f = fx();
  std::stringstream ss;
  f.ball.save(ss);
  auto ball2 = building::ChamberBall::load(f.eng, ss);
  auto A2 = build_tile_alphabet(ball2);
  auto M1b = build_transition_tiles(1, ball2, A2);
  CHECK(M1b == f.M1);
  const auto& syms = f.eng.symbols();
  for (std::uint32_t i = 0; i < f.A.size(); ++i)
    CHECK(A2.keys[i].str(syms) == f.A.keys[i].str(syms));
}
