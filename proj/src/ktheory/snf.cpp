#include "ktheory/snf.hpp"

namespace a2ck::ktheory {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a0) {
  const std::size_t m = a0.rows(), n = a0.cols();
  SNFResult r;
  r.S = a0;
  r.U = IntMatrix::identity(m);
  r.V = IntMatrix::identity(n);
  r.det_u = 1;
  r.det_v = 1;
  IntMatrix& A = r.S;
  IntMatrix& U = r.U;
  IntMatrix& V = r.V;

  auto row_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(A.at(x, j), A.at(y, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(U.at(x, j), U.at(y, j));
    r.det_u = -r.det_u;
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(A.at(i, x), A.at(i, y));
    for (std::size_t i = 0; i < n; ++i) std::swap(V.at(i, x), V.at(i, y));
    r.det_v = -r.det_v;
  };
  auto row_add = [&](std::size_t x, std::size_t y, const Int& f) {  // row x += f * row y
    for (std::size_t j = 0; j < n; ++j) A.at(x, j) += f * A.at(y, j);
    for (std::size_t j = 0; j < m; ++j) U.at(x, j) += f * U.at(y, j);
  };
  auto col_add = [&](std::size_t x, std::size_t y, const Int& f) {  // col x += f * col y
    for (std::size_t i = 0; i < m; ++i) A.at(i, x) += f * A.at(i, y);
    for (std::size_t i = 0; i < n; ++i) V.at(i, x) += f * V.at(i, y);
  };
  auto row_negate = [&](std::size_t x) {
    for (std::size_t j = 0; j < n; ++j) A.at(x, j) = -A.at(x, j);
    for (std::size_t j = 0; j < m; ++j) U.at(x, j) = -U.at(x, j);
    r.det_u = -r.det_u;
  };

  const std::size_t dim = std::min(m, n);
  for (std::size_t t = 0; t < dim;) {
    // deterministic pivot: least |entry| in A[t:,t:], smallest row then column
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (A.at(i, j) == 0) continue;
        if (!found || abs_int(A.at(i, j)) < abs_int(A.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;  // the rest is zero
    row_swap(t, pi);
    col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A.at(i, t) == 0) continue;
        row_add(i, t, -Int(A.at(i, t) / A.at(t, t)));
        if (A.at(i, t) != 0) {  // remainder became the smaller pivot
          row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A.at(t, j) == 0) continue;
        col_add(j, t, -Int(A.at(t, j) / A.at(t, t)));
        if (A.at(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
    }

    // divisibility: fold in any entry the pivot does not divide and redo
    bool redo = false;
    for (std::size_t i = t + 1; i < m && !redo; ++i)
      for (std::size_t j = t + 1; j < n && !redo; ++j)
        if (A.at(i, j) % A.at(t, t) != 0) {
          row_add(t, i, 1);
          redo = true;
        }
    if (redo) continue;
    if (A.at(t, t) < 0) row_negate(t);
    ++t;
  }

  r.diag.reserve(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    r.diag.push_back(A.at(t, t));
    if (A.at(t, t) != 0) ++r.rank;
  }
  // verification: product identity, chain, unimodularity
  if (!(U.mul(a0).mul(V) == A)) throw Error(Errc::internal, "SNF: U*A*V != S");
  for (std::size_t t = 0; t + 1 < dim; ++t) {
    const Int& d1 = r.diag[t];
    const Int& d2 = r.diag[t + 1];
    if (d1 == 0 && d2 != 0) throw Error(Errc::internal, "SNF: zero before nonzero");
    if (d1 != 0 && d2 % d1 != 0) throw Error(Errc::internal, "SNF: divisibility chain broken");
  }
  if (abs_int(r.det_u) != 1 || abs_int(r.det_v) != 1)
    throw Error(Errc::internal, "SNF: transform not unimodular");
  return r;
}

}  // namespace a2ck::ktheory
