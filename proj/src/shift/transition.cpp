#include "shift/transition.hpp"

namespace a2ck::shift {

std::uint64_t ZeroOneMatrix::row_sum(std::uint32_t r) const {
  std::uint64_t s = 0;
  for (std::uint32_t c = 0; c < n; ++c) s += at(r, c);
  return s;
}

std::uint64_t ZeroOneMatrix::col_sum(std::uint32_t c) const {
  std::uint64_t s = 0;
  for (std::uint32_t r = 0; r < n; ++r) s += at(r, c);
  return s;
}

std::uint64_t ZeroOneMatrix::ones() const {
  std::uint64_t s = 0;
  for (auto v : a) s += v;
  return s;
}

namespace {

void check_sums(const ZeroOneMatrix& M, int q, const char* name) {
  const std::uint64_t q2 = static_cast<std::uint64_t>(q) * q;
  for (std::uint32_t k = 0; k < M.n; ++k) {
    if (M.row_sum(k) != q2)
      throw Error(Errc::count_mismatch, std::string(name) + ": row " + std::to_string(k) +
                                            " sums to " + std::to_string(M.row_sum(k)) +
                                            ", expected q^2 = " + std::to_string(q2));
    if (M.col_sum(k) != q2)
      throw Error(Errc::count_mismatch, std::string(name) + ": column " + std::to_string(k) +
                                            " sums to " + std::to_string(M.col_sum(k)) +
                                            ", expected q^2 = " + std::to_string(q2));
  }
}

}  // namespace

ZeroOneMatrix build_transition_tiles(int j, const ChamberBall& ball, const Alphabet& A) {
  if (j != 1 && j != 2) throw Error(Errc::invalid_argument, "transition direction must be 1 or 2");
  if (A.kind != Alphabet::Kind::tile)
    throw Error(Errc::invalid_argument, "tile transitions need the tile alphabet");
  const auto& syms = ball.engine().symbols();
  ZeroOneMatrix M(A.size());
  for (std::uint32_t a = 0; a < A.size(); ++a) {
    const int t = A.type_of(a);
    // Re-anchor the whole representative tile inside the larger lattice and
    // grow the remaining cells; the terminal tile sits at offset (1,0) in a
    // (3,2) parallelogram for j=1, at (0,1) in a (2,3) one for j=2.
    const auto spec = j == 1 ? building::rect_region(3, 2, t) : building::rect_region(2, 2 + 1, t);
    const auto tile = building::rect_region(2, 2, t);
    std::vector<std::pair<building::Slot, std::uint32_t>> anchor;
    for (std::size_t s = 0; s < tile.slots.size(); ++s)
      anchor.emplace_back(tile.slots[s], A.reps[a][s]);
    const int oi = j == 1 ? 1 : 0;
    const int oj = j == 1 ? 0 : 1;
    for (const Embedding& emb : building::enumerate_flat(ball, spec, anchor)) {
      const OrbitKey kb = building::tile_key(ball, spec, emb, oi, oj);
      M.at(A.find(kb, syms), a) = 1;
    }
  }
  check_sums(M, ball.q(), j == 1 ? "M1" : "M2");
  return M;
}

ZeroOneMatrix build_transition_hex(int j, const ChamberBall& ball, const Alphabet& L) {
  if (j != 1 && j != 2) throw Error(Errc::invalid_argument, "transition direction must be 1 or 2");
  if (L.kind != Alphabet::Kind::hexagon)
    throw Error(Errc::invalid_argument, "hexagon transitions need the hexagon alphabet");
  const auto& syms = ball.engine().symbols();
  ZeroOneMatrix N(L.size());
  for (std::uint32_t a = 0; a < L.size(); ++a) {
    const int t = L.type_of(a);
    const auto spec = building::hexagon_pair_region(j, t);
    const auto hex = building::hexagon_region(t);
    std::vector<std::pair<building::Slot, std::uint32_t>> anchor;
    for (std::size_t s = 0; s < hex.slots.size(); ++s)
      anchor.emplace_back(hex.slots[s], L.reps[a][s]);
    const int oi = j == 1 ? 1 : 0;
    const int oj = j == 1 ? 0 : 1;
    for (const Embedding& emb : building::enumerate_flat(ball, spec, anchor)) {
      const OrbitKey kb = building::hexagon_key(ball, spec, emb, oi, oj);
      N.at(L.find(kb, syms), a) = 1;
    }
  }
  check_sums(N, ball.q(), j == 1 ? "N1" : "N2");
  return N;
}

bool block_structure_ok(const ZeroOneMatrix& M, const Alphabet& A, int j) {
  for (std::uint32_t b = 0; b < M.n; ++b)
    for (std::uint32_t a = 0; a < M.n; ++a)
      if (M.at(b, a) && A.type_of(b) != (A.type_of(a) + j) % 3) return false;
  return true;
}

}  // namespace a2ck::shift
