#include "building/link.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace a2ck::building {

LinkGraph vertex_link(const ChamberBall& ball, std::uint32_t ci, int t) {
  const auto& eng = ball.engine();
  auto members = ball.chambers_at(ci, t);  // throws if truncated
  auto coset_key = [&](std::uint32_t c, int p) {
    const Word& w = ball.word(c);
    Word best;
    bool first = true;
    for (const Word& h : eng.panel(p)) {
      Word x = eng.mul(w, h);
      if (first || group::shortlex_less(x, best)) {
        best = std::move(x);
        first = false;
      }
    }
    return best;
  };
  LinkGraph g;
  std::map<Word, std::uint32_t> pidx, lidx;
  const int p_point = t;            // pair {t, t+1}
  const int p_line = (t + 2) % 3;   // pair {t-1, t}
  for (std::uint32_t c : members) {
    Word pk = coset_key(c, p_point);
    Word lk = coset_key(c, p_line);
    auto [ip, newp] = pidx.emplace(pk, static_cast<std::uint32_t>(g.points.size()));
    if (newp) g.points.push_back(ip->first);
    auto [il, newl] = lidx.emplace(lk, static_cast<std::uint32_t>(g.lines.size()));
    if (newl) g.lines.push_back(il->first);
    g.edges.emplace_back(ip->second, il->second);
  }
  return g;
}

LinkReport validate_link(const LinkGraph& g, int q) {
  LinkReport r;
  const int n = q * q + q + 1;
  r.points = static_cast<int>(g.points.size());
  r.lines = static_cast<int>(g.lines.size());
  if (r.points != n || r.lines != n) {
    r.detail = "expected " + std::to_string(n) + " nodes per side, got " +
               std::to_string(r.points) + "+" + std::to_string(r.lines);
    return r;
  }
  if (g.edges.size() != static_cast<std::size_t>(n) * (q + 1)) {
    r.detail = "expected " + std::to_string(n * (q + 1)) + " edges";
    return r;
  }
  auto sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  r.simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!r.simple) {
    r.detail = "parallel edges (two chambers share both panel cosets)";
    return r;
  }
  std::vector<int> dp(n, 0), dl(n, 0);
  for (auto [a, b] : g.edges) {
    ++dp[a];
    ++dl[b];
  }
  r.biregular = std::all_of(dp.begin(), dp.end(), [&](int d) { return d == q + 1; }) &&
                std::all_of(dl.begin(), dl.end(), [&](int d) { return d == q + 1; });
  if (!r.biregular) {
    r.detail = "not (q+1)-biregular";
    return r;
  }

  // Undirected graph on 2n nodes: points 0..n-1, lines n..2n-1.
  std::vector<std::vector<int>> adj(2 * n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(n + b);
    adj[n + b].push_back(a);
  }
  int girth = 1 << 30, diam = 0;
  std::vector<int> dist(2 * n), par(2 * n);
  for (int s = 0; s < 2 * n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    par[s] = -1;
    std::deque<int> bfs{s};
    int reached = 0;
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop_front();
      ++reached;
      diam = std::max(diam, dist[x]);
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          par[y] = x;
          bfs.push_back(y);
        } else if (par[x] != y) {
          girth = std::min(girth, dist[x] + dist[y] + 1);
        }
      }
    }
    if (reached != 2 * n) {
      r.detail = "disconnected (component of size " + std::to_string(reached) + ")";
      return r;
    }
  }
  r.connected = true;
  r.girth = girth;
  r.diameter = diam;
  if (girth != 6) {
    r.detail = "girth " + std::to_string(girth) + ", expected 6";
    return r;
  }
  if (diam != 3) {
    r.detail = "diameter " + std::to_string(diam) + ", expected 3";
    return r;
  }
  r.pass = true;
  return r;
}

}  // namespace a2ck::building
