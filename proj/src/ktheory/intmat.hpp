#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "common.hpp"

namespace a2ck::ktheory {

// Arbitrary-precision integers; this module performs exact arithmetic only.
using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  IntMatrix transposed() const;
  IntMatrix mul(const IntMatrix& o) const;
  // (A | B) side by side
  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

// Fraction-free Bareiss determinant (exact); used as an independent route
// to cross-check unimodularity on small matrices.
Int determinant_bareiss(IntMatrix a);

}  // namespace a2ck::ktheory
