#include "ktheory/intmat.hpp"

#include <sstream>

namespace a2ck::ktheory {

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  if (c_ != o.r_) throw Error(Errc::invalid_argument, "matrix product dimension mismatch");
  IntMatrix out(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(Errc::invalid_argument, "hconcat row mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j);
    os << "\n";
  }
  return os.str();
}

Int determinant_bareiss(IntMatrix a) {
  if (a.rows() != a.cols()) throw Error(Errc::invalid_argument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace a2ck::ktheory
