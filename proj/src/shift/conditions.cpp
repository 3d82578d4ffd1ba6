#include "shift/conditions.hpp"

#include <algorithm>
#include <deque>

namespace a2ck::shift {

namespace {

std::vector<std::uint32_t> int_product(const ZeroOneMatrix& X, const ZeroOneMatrix& Y) {
  const std::uint32_t n = X.n;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t k = 0; k < n; ++k)
      if (X.at(i, k))
        for (std::uint32_t j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] += Y.at(k, j);
  return out;
}

}  // namespace

CheckResult verify_H1(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2) {
  const std::uint32_t n = M1.n;
  auto P12 = int_product(M1, M2);
  auto P21 = int_product(M2, M1);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto v12 = P12[static_cast<std::size_t>(i) * n + j];
      const auto v21 = P21[static_cast<std::size_t>(i) * n + j];
      if (v12 != v21)
        return CheckResult::make("H1", "(H1) M1*M2 = M2*M1, entries in {0,1}", false,
                                 "commuting products", "differ at (" + std::to_string(i) + "," +
                                     std::to_string(j) + "): " + std::to_string(v12) + " vs " +
                                     std::to_string(v21));
      if (v12 > 1)
        return CheckResult::make("H1", "(H1) M1*M2 = M2*M1, entries in {0,1}", false,
                                 "0/1 product", "entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") = " + std::to_string(v12));
    }
  return CheckResult::make("H1", "(H1) M1*M2 = M2*M1, entries in {0,1}", true,
                           "commuting 0/1 product", "commuting 0/1 product");
}

CheckResult verify_H2(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2) {
  const std::uint32_t n = M1.n;
  const char* anchor = "(H2) transition digraph irreducible; (M1+M2)^3 > 0";
  // union digraph: edge a -> b when M1(b,a) or M2(b,a)
  auto reaches_all = [&](bool forward) -> std::int64_t {
    std::vector<char> seen(n, 0);
    std::deque<std::uint32_t> bfs{0};
    seen[0] = 1;
    std::uint32_t cnt = 1;
    while (!bfs.empty()) {
      const std::uint32_t x = bfs.front();
      bfs.pop_front();
      for (std::uint32_t y = 0; y < n; ++y) {
        const bool edge = forward ? (M1.at(y, x) || M2.at(y, x)) : (M1.at(x, y) || M2.at(x, y));
        if (edge && !seen[y]) {
          seen[y] = 1;
          ++cnt;
          bfs.push_back(y);
        }
      }
    }
    if (cnt == n) return -1;
    for (std::uint32_t y = 0; y < n; ++y)
      if (!seen[y]) return y;
    return -1;
  };
  if (auto bad = reaches_all(true); bad >= 0)
    return CheckResult::make("H2", anchor, false, "strongly connected",
                             "letter " + std::to_string(bad) + " unreachable from letter 0");
  if (auto bad = reaches_all(false); bad >= 0)
    return CheckResult::make("H2", anchor, false, "strongly connected",
                             "letter 0 unreachable from letter " + std::to_string(bad));

  // boolean (M1+M2)^3
  std::vector<char> S(static_cast<std::size_t>(n) * n), S2(S.size()), S3(S.size());
  for (std::size_t k = 0; k < S.size(); ++k) S[k] = M1.a[k] || M2.a[k];
  auto boolmul = [&](const std::vector<char>& X, const std::vector<char>& Y,
                     std::vector<char>& out) {
    std::fill(out.begin(), out.end(), 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < n; ++k)
        if (X[static_cast<std::size_t>(i) * n + k])
          for (std::uint32_t j = 0; j < n; ++j)
            if (Y[static_cast<std::size_t>(k) * n + j]) out[static_cast<std::size_t>(i) * n + j] = 1;
  };
  boolmul(S, S, S2);
  boolmul(S2, S, S3);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (!S3[static_cast<std::size_t>(i) * n + j])
        return CheckResult::make("H2", anchor, false, "(M1+M2)^3 entrywise positive",
                                 "no length-3 path from letter " + std::to_string(j) +
                                     " to letter " + std::to_string(i));
  return CheckResult::make("H2", anchor, true, "strongly connected, cube positive",
                           "strongly connected, cube positive");
}

namespace {

// DFS over all words of shape (m,n); returns false from visit() to stop.
template <typename F>
void for_each_word(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2, int m, int n, F&& visit) {
  const std::uint32_t na = M1.n;
  Word2D w;
  w.m = m;
  w.n = n;
  w.letters.assign(static_cast<std::size_t>(m + 1) * (n + 1), 0);
  bool stop = false;
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (stop) return;
    if (j > n) {
      if (!visit(const_cast<const Word2D&>(w))) stop = true;
      return;
    }
    const int ni = i == m ? 0 : i + 1;
    const int nj = i == m ? j + 1 : j;
    for (std::uint32_t c = 0; c < na; ++c) {
      if (i > 0 && !M1.at(c, w.at(i - 1, j))) continue;
      if (j > 0 && !M2.at(c, w.at(i, j - 1))) continue;
      w.letters[static_cast<std::size_t>(j) * (m + 1) + i] = c;
      self(self, ni, nj);
      if (stop) return;
    }
  };
  rec(rec, 0, 0);
}

bool word_valid(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2, const Word2D& w) {
  for (int j = 0; j <= w.n; ++j)
    for (int i = 0; i <= w.m; ++i) {
      if (i > 0 && !M1.at(w.at(i, j), w.at(i - 1, j))) return false;
      if (j > 0 && !M2.at(w.at(i, j), w.at(i, j - 1))) return false;
    }
  return true;
}

}  // namespace

std::uint64_t count_words(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2, int m, int n) {
  std::uint64_t cnt = 0;
  for_each_word(M1, M2, m, n, [&](const Word2D&) {
    ++cnt;
    return true;
  });
  return cnt;
}

CheckResult verify_H3(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2, int window, int shape_cap,
                      std::vector<H3Witness>* witnesses) {
  const std::string anchor = "(H3) some word breaks every (p1,p2)-periodicity";
  const std::string name = "H3 (shift-mismatch form)";
  for (int p1 = -window; p1 <= window; ++p1) {
    for (int p2 = -window; p2 <= window; ++p2) {
      if (p1 == 0 && p2 == 0) continue;
      std::optional<H3Witness> found;
      for (int m = std::abs(p1); m <= shape_cap && !found; ++m) {
        for (int n = std::abs(p2); n <= shape_cap && !found; ++n) {
          for_each_word(M1, M2, m, n, [&](const Word2D& w) {
            for (int j = 0; j <= n; ++j)
              for (int i = 0; i <= m; ++i) {
                const int i2 = i + p1, j2 = j + p2;
                if (i2 < 0 || i2 > m || j2 < 0 || j2 > n) continue;
                if (w.at(i, j) != w.at(i2, j2)) {
                  found = H3Witness{p1, p2, w, i, j};
                  return false;
                }
              }
            return true;
          });
        }
      }
      if (!found)
        return CheckResult{name, anchor, CheckStatus::inconclusive,
                           "witness for every offset",
                           "no witness for offset (" + std::to_string(p1) + "," +
                               std::to_string(p2) + ") within shape cap " +
                               std::to_string(shape_cap),
                           "search exhausted; not a pass"};
      // independent re-validation of the witness
      const auto& wit = *found;
      if (!word_valid(M1, M2, wit.word) ||
          wit.word.at(wit.i, wit.j) == wit.word.at(wit.i + p1, wit.j + p2))
        return CheckResult::make(name, anchor, false, "valid witness",
                                 "witness re-validation failed for offset (" +
                                     std::to_string(p1) + "," + std::to_string(p2) + ")");
      if (witnesses) witnesses->push_back(wit);
    }
  }
  const int total = (2 * window + 1) * (2 * window + 1) - 1;
  return CheckResult::make(name, anchor, true, "verified witness for all offsets",
                           "verified witnesses for all " + std::to_string(total) + " offsets");
}

CheckResult word_count_crosscheck(int m, int n, const ChamberBall& ball, const Alphabet& A,
                                  const ZeroOneMatrix& M1, const ZeroOneMatrix& M2) {
  const std::string name =
      "word-count (" + std::to_string(m) + "," + std::to_string(n) + ")";
  const std::string anchor = "words of shape (m,n) <-> orbits of (m+2,n+2) parallelograms";
  if (A.kind != Alphabet::Kind::tile)
    throw Error(Errc::invalid_argument, "crosscheck needs the tile alphabet");
  const std::uint64_t mat = count_words(M1, M2, m, n);
  std::uint64_t geo = 0;
  for (int t = 0; t < 3; ++t) {
    const auto spec = building::rect_region(m + 2, n + 2, t);
    geo += building::enumerate_flat(ball, spec, {{{0, 0, false}, 0}}).size();
  }
  if (mat != geo)
    throw Error(Errc::count_mismatch, name + ": matrix side " + std::to_string(mat) +
                                          " != geometric side " + std::to_string(geo));
  return CheckResult::make(name, anchor, true, "matrix count = parallelogram count",
                           std::to_string(mat) + " = " + std::to_string(geo));
}

}  // namespace a2ck::shift
