#include "building/ball.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace a2ck::building {

ChamberBall ChamberBall::build(const GroupEngine& eng, int radius) {
  if (radius < 0) throw Error(Errc::invalid_argument, "negative ball radius");
  const auto& rs = eng.rewrite_system();
  if (rs.status() == group::RewriteSystem::Status::bounded_confluent) {
    const std::size_t budget = rs.safe_element_length();
    if (static_cast<std::size_t>(radius) * eng.max_panel_element_length() > budget)
      throw Error(Errc::length_overflow,
                  "radius " + std::to_string(radius) +
                      " exceeds the certified word-length budget / max panel element length");
  }

  ChamberBall b;
  b.eng_ = &eng;
  b.radius_ = radius;
  b.chambers_.push_back(Word{});
  b.dist_.push_back(0);
  b.index_.emplace(Word{}, 0);

  std::vector<std::uint32_t> frontier{0};
  for (int d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t ci : frontier) {
      const Word w = b.chambers_[ci];  // by value: the vector reallocates below
      for (int p = 0; p < 3; ++p) {
        for (const Word& h : eng.panel(p)) {
          if (h.empty()) continue;
          Word x = eng.mul(w, h);
          auto [it, inserted] = b.index_.emplace(std::move(x), b.size());
          if (inserted) {
            b.chambers_.push_back(it->first);
            b.dist_.push_back(static_cast<std::uint16_t>(d));
            next.push_back(it->second);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  b.fill_adjacency_and_validate();
  return b;
}

void ChamberBall::fill_adjacency_and_validate() {
  const int qq = q();
  adj_.assign(static_cast<std::size_t>(size()) * 3 * qq, -1);
  for (std::uint32_t ci = 0; ci < size(); ++ci) {
    const Word& w = chambers_[ci];
    for (int p = 0; p < 3; ++p) {
      int slot = 0;
      for (const Word& h : eng_->panel(p)) {
        if (h.empty()) continue;
        auto it = index_.find(eng_->mul(w, h));
        adj_[(static_cast<std::size_t>(ci) * 3 + p) * qq + slot] =
            it == index_.end() ? -1 : static_cast<std::int32_t>(it->second);
        ++slot;
      }
    }
  }
  // Interior residues must be (q+1)-cliques: every chamber strictly inside
  // the shell has q distinct p-neighbors, and any two of them are mutually
  // adjacent through the same panel.
  for (std::uint32_t ci = 0; ci < size(); ++ci) {
    if (dist_[ci] >= radius_) continue;
    for (int p = 0; p < 3; ++p) {
      auto ns = neighbors(ci, p);
      for (std::size_t a = 0; a < ns.size(); ++a) {
        if (ns[a] < 0)
          throw Error(Errc::internal, "interior chamber with truncated residue");
        if (ns[a] == static_cast<std::int32_t>(ci))
          throw Error(Errc::count_mismatch, "residue clique violation: self-adjacency");
        for (std::size_t bidx = a + 1; bidx < ns.size(); ++bidx)
          if (ns[a] == ns[bidx])
            throw Error(Errc::count_mismatch,
                        "residue clique violation: panel elements collide at chamber " +
                            eng_->symbols().render(chambers_[ci]));
        if (dist_[ns[a]] < radius_ &&
            !adjacent(static_cast<std::uint32_t>(ns[a]), ci, p))
          throw Error(Errc::count_mismatch, "residue clique violation: asymmetric adjacency");
      }
    }
  }
}

std::int64_t ChamberBall::find(const Word& nf) const {
  auto it = index_.find(nf);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Word ChamberBall::vertex_key(std::uint32_t ci, int t) const {
  const Word& w = chambers_[ci];
  const Word* best = nullptr;
  Word cur;
  for (const Word& h : eng_->vertex_group(t)) {
    Word x = eng_->mul(w, h);
    if (!best || group::shortlex_less(x, *best)) {
      cur = std::move(x);
      best = &cur;
    }
  }
  return cur;
}

std::vector<std::uint32_t> ChamberBall::chambers_at(std::uint32_t ci, int t) const {
  const Word& w = chambers_[ci];
  std::vector<std::uint32_t> out;
  out.reserve(eng_->vertex_group(t).size());
  for (const Word& h : eng_->vertex_group(t)) {
    auto it = index_.find(eng_->mul(w, h));
    if (it == index_.end())
      throw Error(Errc::truncated, "vertex residue truncated by the ball boundary");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ChamberBall::save(std::ostream& out) const {
  out << "a2ckball 1 q=" << q() << " radius=" << radius_ << " chambers=" << size() << "\n";
  for (std::uint32_t ci = 0; ci < size(); ++ci)
    out << dist_[ci] << ' ' << eng_->symbols().render(chambers_[ci]) << "\n";
  // adjacency triplets (chamber index, panel type pair, neighbor index)
  for (std::uint32_t ci = 0; ci < size(); ++ci)
    for (int p = 0; p < 3; ++p)
      for (std::int32_t n : neighbors(ci, p))
        if (n >= 0 && n > static_cast<std::int32_t>(ci)) out << ci << ' ' << p << ' ' << n << "\n";
}

ChamberBall ChamberBall::load(const GroupEngine& eng, std::istream& in) {
  std::string magic;
  int version = 0;
  std::string qs, rs, cs;
  if (!(in >> magic >> version >> qs >> rs >> cs) || magic != "a2ckball" || version != 1)
    throw Error(Errc::parse, "ball cache: bad header");
  auto num = [](const std::string& kv) { return std::stol(kv.substr(kv.find('=') + 1)); };
  if (num(qs) != eng.q()) throw Error(Errc::parse, "ball cache: q mismatch");
  ChamberBall b;
  b.eng_ = &eng;
  b.radius_ = static_cast<int>(num(rs));
  const std::size_t n = static_cast<std::size_t>(num(cs));
  std::string line;
  std::getline(in, line);
  b.chambers_.reserve(n);
  b.dist_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw Error(Errc::parse, "ball cache: truncated chamber list");
    std::istringstream ls(line);
    int d;
    ls >> d;
    std::string rest;
    std::getline(ls, rest);
    Word w = eng.symbols().parse_word(rest);
    b.index_.emplace(w, static_cast<std::uint32_t>(i));
    b.chambers_.push_back(std::move(w));
    b.dist_.push_back(static_cast<std::uint16_t>(d));
  }
  // Adjacency is rebuilt from the group law and must match the stored
  // triplets; a disagreement means the cache is stale.
  b.fill_adjacency_and_validate();
  std::size_t triplets = 0;
  std::uint32_t ci;
  int p;
  std::int32_t nj;
  while (in >> ci >> p >> nj) {
    if (ci >= b.size() || p < 0 || p > 2 || !b.adjacent(ci, nj, p))
      throw Error(Errc::parse, "ball cache: adjacency triplet mismatch");
    ++triplets;
  }
  (void)triplets;
  return b;
}

VertexIndex VertexIndex::build(const ChamberBall& ball) {
  VertexIndex vi;
  vi.of_chamber.assign(ball.size(), {-1, -1, -1});
  const auto& eng = ball.engine();
  const std::size_t k = eng.vertex_group(0).size();
  for (std::uint32_t ci = 0; ci < ball.size(); ++ci) {
    for (int t = 0; t < 3; ++t) {
      if (vi.of_chamber[ci][t] >= 0) continue;
      // spread the whole coset at once so each vertex is keyed exactly once
      const Word& w = ball.word(ci);
      Vertex v;
      v.type = t;
      Word best;
      bool first = true;
      for (const Word& h : eng.vertex_group(t)) {
        Word x = eng.mul(w, h);
        if (first || group::shortlex_less(x, best)) {
          best = x;
          first = false;
        }
        auto j = ball.find(x);
        if (j >= 0) v.members.push_back(static_cast<std::uint32_t>(j));
      }
      v.key = std::move(best);
      v.interior = v.members.size() == k;
      std::sort(v.members.begin(), v.members.end());
      const auto id = static_cast<std::int32_t>(vi.verts.size());
      for (std::uint32_t m : v.members) vi.of_chamber[m][t] = id;
      vi.verts.push_back(std::move(v));
    }
  }
  return vi;
}

}  // namespace a2ck::building
