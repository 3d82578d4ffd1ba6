#include "shift/alphabet.hpp"

#include <algorithm>
#include <numeric>

namespace a2ck::shift {

namespace {

Alphabet assemble(Alphabet::Kind kind, int q, std::vector<std::pair<OrbitKey, Embedding>> items,
                  std::uint64_t expected_per_block, const group::SymbolTable& syms) {
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Alphabet a;
  a.kind = kind;
  a.q = q;
  for (auto& [k, e] : items) {
    if (!a.keys.empty() && a.keys.back() == k)
      throw Error(Errc::count_mismatch, "duplicate orbit key in anchored enumeration");
    a.keys.push_back(std::move(k));
    a.reps.push_back(std::move(e));
  }
  std::uint32_t pos = 0;
  for (int t = 0; t < 3; ++t) {
    std::uint32_t begin = pos;
    while (pos < a.size() && a.keys[pos].type == t) ++pos;
    a.blocks[t] = {begin, pos};
    const std::uint64_t got = pos - begin;
    if (got != expected_per_block)
      throw Error(Errc::count_mismatch,
                  "alphabet block for type " + std::to_string(t) + " has " + std::to_string(got) +
                      " keys, expected " + std::to_string(expected_per_block));
  }
  if (pos != a.size()) throw Error(Errc::internal, "alphabet keys out of type order");
  for (std::uint32_t i = 0; i < a.size(); ++i) a.index.emplace(a.keys[i].str(syms), i);
  return a;
}

}  // namespace

std::uint32_t Alphabet::find(const OrbitKey& k, const group::SymbolTable& syms) const {
  auto it = index.find(k.str(syms));
  if (it == index.end())
    throw Error(Errc::count_mismatch, "orbit key missing from alphabet: " + k.str(syms));
  return it->second;
}

Alphabet build_tile_alphabet(const ChamberBall& ball) {
  const int q = ball.q();
  std::uint64_t q5 = 1;
  for (int k = 0; k < 5; ++k) q5 *= q;
  std::vector<std::pair<OrbitKey, Embedding>> items;
  for (int t = 0; t < 3; ++t) {
    const auto spec = building::rect_region(2, 2, t);
    for (const Embedding& emb : building::enumerate_flat(ball, spec, {{{0, 0, false}, 0}}))
      items.emplace_back(building::tile_key(ball, spec, emb, 0, 0), emb);
  }
  return assemble(Alphabet::Kind::tile, q, std::move(items), q5, ball.engine().symbols());
}

Alphabet build_hexagon_alphabet(const ChamberBall& ball) {
  const int q = ball.q();
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  std::vector<std::pair<OrbitKey, Embedding>> items;
  for (int t = 0; t < 3; ++t) {
    const auto spec = building::hexagon_region(t);
    const auto up = building::hexagon_positions(0, 0)[0];
    for (const Embedding& emb : building::enumerate_flat(ball, spec, {{up, 0}}))
      items.emplace_back(building::hexagon_key(ball, spec, emb, 0, 0), emb);
  }
  return assemble(Alphabet::Kind::hexagon, q, std::move(items), q3, ball.engine().symbols());
}

}  // namespace a2ck::shift
