#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "checks.hpp"
#include "shift/transition.hpp"

namespace a2ck::shift {

// (H1): M1 M2 = M2 M1 over the integers and the product is a 0/1 matrix,
// so any lower-left/upper-right letter pair completes uniquely.
CheckResult verify_H1(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2);

// (H2): the colored transition digraph is strongly connected; additionally
// the boolean cube (M1+M2)^3 must be entrywise positive (a directed path of
// length 3 between any two letters).
CheckResult verify_H2(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2);

// A two-dimensional word over the alphabet: letters w(i,j) for
// 0 <= i <= m, 0 <= j <= n with M1(w(i+1,j), w(i,j)) = M2(w(i,j+1), w(i,j)) = 1.
struct Word2D {
  int m = 0, n = 0;
  std::vector<std::uint32_t> letters;  // (n+1) rows of (m+1)
  std::uint32_t at(int i, int j) const { return letters[static_cast<std::size_t>(j) * (m + 1) + i]; }
};

struct H3Witness {
  int p1 = 0, p2 = 0;
  Word2D word;
  int i = 0, j = 0;  // w(i,j) != w(i+p1, j+p2)
};

// (H3), shift-mismatch form: for every offset (p1,p2) != (0,0) with
// |p1|,|p2| <= window, search words of shape up to shape_cap for a position
// where the letter differs from its (p1,p2)-translate. Witnesses are
// re-validated against both matrices. A fruitless search is reported as
// inconclusive, never as a pass.
CheckResult verify_H3(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2, int window, int shape_cap,
                      std::vector<H3Witness>* witnesses = nullptr);

// Counts words of shape (m,n) two ways: from the transition matrices and by
// enumerating flat (m+2,n+2) parallelograms anchored at the identity over
// all three base types (their orbits are the words). Exact equality.
CheckResult word_count_crosscheck(int m, int n, const ChamberBall& ball, const Alphabet& A,
                                  const ZeroOneMatrix& M1, const ZeroOneMatrix& M2);

// Matrix-side count of words of shape (m,n).
std::uint64_t count_words(const ZeroOneMatrix& M1, const ZeroOneMatrix& M2, int m, int n);

}  // namespace a2ck::shift
