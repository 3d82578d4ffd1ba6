#include "building/region.hpp"

#include <algorithm>
#include <map>

#include "group/datum.hpp"

namespace a2ck::building {

namespace {

int vtype(int base, int k, int l) { return ((base + k - l) % 3 + 3) % 3; }

std::array<std::pair<int, int>, 3> slot_vertices(const Slot& s) {
  if (s.upper)
    return {{{s.i + 1, s.j}, {s.i, s.j + 1}, {s.i + 1, s.j + 1}}};
  return {{{s.i, s.j}, {s.i + 1, s.j}, {s.i, s.j + 1}}};
}

struct ModelEdge {
  Slot a, b;
  std::pair<int, int> u, v;  // shared lattice vertices
};

// Every interior edge of the lattice is shared by one lower and one upper
// chamber; three cases relative to the lower slot.
std::vector<ModelEdge> model_edges(const std::vector<Slot>& slots) {
  std::vector<ModelEdge> out;
  auto has = [&](const Slot& s) { return std::binary_search(slots.begin(), slots.end(), s); };
  for (const Slot& s : slots) {
    if (s.upper) continue;
    const int i = s.i, j = s.j;
    const Slot diag{static_cast<std::int8_t>(i), static_cast<std::int8_t>(j), true};
    const Slot left{static_cast<std::int8_t>(i - 1), static_cast<std::int8_t>(j), true};
    const Slot below{static_cast<std::int8_t>(i), static_cast<std::int8_t>(j - 1), true};
    if (has(diag)) out.push_back({s, diag, {i + 1, j}, {i, j + 1}});
    if (has(left)) out.push_back({s, left, {i, j}, {i, j + 1}});
    if (has(below)) out.push_back({s, below, {i, j}, {i + 1, j}});
  }
  return out;
}

struct Plan {
  struct Con {
    int prev;  // scan index of the already placed slot
    int pair;  // panel type pair of the shared edge
  };
  struct Step {
    int slot;  // scan index
    bool anchored;
    std::vector<Con> cons;
  };
  std::vector<Step> steps;
};

Plan make_plan(const RegionSpec& spec, const std::vector<bool>& anchored) {
  const auto& slots = spec.slots;
  auto scan_index = [&](const Slot& s) {
    auto it = std::lower_bound(slots.begin(), slots.end(), s);
    return static_cast<int>(it - slots.begin());
  };
  std::vector<std::vector<Plan::Con>> adj(slots.size());
  for (const auto& e : model_edges(slots)) {
    const int pair = group::pair_index(vtype(spec.base_type, e.u.first, e.u.second),
                                       vtype(spec.base_type, e.v.first, e.v.second));
    const int ia = scan_index(e.a), ib = scan_index(e.b);
    adj[ia].push_back({ib, pair});
    adj[ib].push_back({ia, pair});
  }

  Plan plan;
  std::vector<bool> placed(slots.size(), false);
  auto place = [&](int k) {
    Plan::Step st;
    st.slot = k;
    st.anchored = anchored[k];
    for (const auto& c : adj[k])
      if (placed[c.prev]) st.cons.push_back(c);
    placed[k] = true;
    plan.steps.push_back(std::move(st));
  };
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (anchored[k]) place(static_cast<int>(k));
  if (plan.steps.empty())
    throw Error(Errc::invalid_argument, "enumerate_flat requires an anchor");
  for (;;) {
    int pick = -1;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (placed[k]) continue;
      bool connected = std::any_of(adj[k].begin(), adj[k].end(),
                                   [&](const Plan::Con& c) { return placed[c.prev]; });
      if (connected) {
        pick = static_cast<int>(k);
        break;
      }
    }
    if (pick < 0) break;
    place(pick);
  }
  if (plan.steps.size() != slots.size())
    throw Error(Errc::invalid_argument, "region pattern is not edge-connected");
  return plan;
}

}  // namespace

RegionSpec rect_region(int m, int n, int base_type) {
  RegionSpec spec;
  spec.base_type = base_type;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      for (int u = 0; u < 2; ++u)
        spec.slots.push_back({static_cast<std::int8_t>(i), static_cast<std::int8_t>(j), u == 1});
  std::sort(spec.slots.begin(), spec.slots.end());
  return spec;
}

std::array<Slot, 6> hexagon_positions(int oi, int oj) {
  auto s = [&](int di, int dj, bool up) {
    return Slot{static_cast<std::int8_t>(oi + di), static_cast<std::int8_t>(oj + dj), up};
  };
  return {s(1, 1, false), s(0, 0, true),  s(1, 0, false),
          s(0, 1, true),  s(0, 1, false), s(1, 0, true)};
}

RegionSpec hexagon_region(int base_type) {
  RegionSpec spec;
  spec.base_type = base_type;
  auto pos = hexagon_positions(0, 0);
  spec.slots.assign(pos.begin(), pos.end());
  std::sort(spec.slots.begin(), spec.slots.end());
  return spec;
}

RegionSpec hexagon_pair_region(int direction, int base_type) {
  if (direction != 1 && direction != 2)
    throw Error(Errc::invalid_argument, "hexagon pair direction must be 1 or 2");
  RegionSpec spec;
  spec.base_type = base_type;
  auto base = hexagon_positions(0, 0);
  auto shifted = direction == 1 ? hexagon_positions(1, 0) : hexagon_positions(0, 1);
  spec.slots.assign(base.begin(), base.end());
  spec.slots.insert(spec.slots.end(), shifted.begin(), shifted.end());
  std::sort(spec.slots.begin(), spec.slots.end());
  spec.slots.erase(std::unique(spec.slots.begin(), spec.slots.end()), spec.slots.end());
  return spec;
}

std::vector<Embedding> enumerate_flat(const ChamberBall& ball, const RegionSpec& spec,
                                      const std::vector<std::pair<Slot, std::uint32_t>>& anchor) {
  const auto& slots = spec.slots;
  std::vector<bool> anchored(slots.size(), false);
  std::vector<std::uint32_t> anchor_val(slots.size(), 0);
  for (const auto& [slot, c] : anchor) {
    auto it = std::lower_bound(slots.begin(), slots.end(), slot);
    if (it == slots.end() || !(*it == slot))
      throw Error(Errc::invalid_argument, "anchor slot not in region");
    anchored[it - slots.begin()] = true;
    anchor_val[it - slots.begin()] = c;
  }
  const Plan plan = make_plan(spec, anchored);

  const int margin = ball.radius() - 2;
  auto check_margin = [&](std::uint32_t c) {
    if (ball.dist(c) > margin)
      throw Error(Errc::truncated,
                  "ball too small: region reaches within 2 gallery steps of the shell");
  };

  std::vector<Embedding> out;
  std::vector<std::uint32_t> img(slots.size(), 0);
  std::vector<bool> used_slot(slots.size(), false);
  std::vector<std::uint32_t> used_chambers;

  auto satisfies = [&](std::uint32_t c, const Plan::Step& st) {
    for (const auto& con : st.cons)
      if (!ball.adjacent(img[con.prev], c, con.pair)) return false;
    return std::find(used_chambers.begin(), used_chambers.end(), c) == used_chambers.end();
  };

  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == plan.steps.size()) {
      out.push_back(img);
      return;
    }
    const auto& st = plan.steps[depth];
    auto try_place = [&](std::uint32_t c) {
      check_margin(c);
      if (!satisfies(c, st)) return;
      img[st.slot] = c;
      used_chambers.push_back(c);
      self(self, depth + 1);
      used_chambers.pop_back();
    };
    if (st.anchored) {
      try_place(anchor_val[st.slot]);
      return;
    }
    // q candidates from the first constraint's residue, filtered by the rest
    const auto& first = st.cons.front();
    for (std::int32_t c : ball.neighbors(img[first.prev], first.pair)) {
      if (c < 0)
        throw Error(Errc::truncated, "ball too small: residue truncated during enumeration");
      try_place(static_cast<std::uint32_t>(c));
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string OrbitKey::str(const group::SymbolTable& syms) const {
  std::string s = std::to_string(type) + "|";
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (k) s += ';';
    s += syms.render(words[k]);
  }
  return s;
}

namespace {

OrbitKey region_key(const ChamberBall& ball, const RegionSpec& spec, const Embedding& emb,
                    const Slot& init, const std::vector<Slot>& subset, int key_type) {
  const auto& eng = ball.engine();
  auto at = [&](const Slot& s) {
    auto it = std::lower_bound(spec.slots.begin(), spec.slots.end(), s);
    if (it == spec.slots.end() || !(*it == s))
      throw Error(Errc::invalid_argument, "key slot not in region");
    return emb[it - spec.slots.begin()];
  };
  const Word g0i = eng.inv(ball.word(at(init)));
  OrbitKey key;
  key.type = key_type;
  key.words.reserve(subset.size());
  for (const Slot& s : subset) key.words.push_back(eng.mul(g0i, ball.word(at(s))));
  return key;
}

}  // namespace

OrbitKey tile_key(const ChamberBall& ball, const RegionSpec& spec, const Embedding& emb,
                  int oi, int oj) {
  std::vector<Slot> subset;
  for (int j = oj; j < oj + 2; ++j)
    for (int i = oi; i < oi + 2; ++i)
      for (int u = 0; u < 2; ++u)
        subset.push_back({static_cast<std::int8_t>(i), static_cast<std::int8_t>(j), u == 1});
  return region_key(ball, spec, emb,
                    {static_cast<std::int8_t>(oi), static_cast<std::int8_t>(oj), false}, subset,
                    vtype(spec.base_type, oi, oj));
}

OrbitKey hexagon_key(const ChamberBall& ball, const RegionSpec& spec, const Embedding& emb,
                     int oi, int oj) {
  auto pos = hexagon_positions(oi, oj);
  return region_key(ball, spec, emb, pos[0], std::vector<Slot>(pos.begin(), pos.end()),
                    vtype(spec.base_type, oi + 1, oj + 1));
}

std::vector<Hexagon> hexagons_with_up(const ChamberBall& ball, std::uint32_t c, int t) {
  const RegionSpec spec = hexagon_region(t);
  const auto pos = hexagon_positions(0, 0);
  std::vector<Hexagon> out;
  for (const Embedding& emb : enumerate_flat(ball, spec, {{pos[0], c}})) {
    Hexagon h;
    h.type = t;
    for (int k = 0; k < 6; ++k) {
      auto it = std::lower_bound(spec.slots.begin(), spec.slots.end(), pos[k]);
      h.chambers[k] = emb[it - spec.slots.begin()];
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace a2ck::building
