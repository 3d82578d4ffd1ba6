#include "ktheory/kcompute.hpp"

namespace a2ck::ktheory {

IntMatrix i_minus(const ZeroOneMatrix& x) {
  IntMatrix out(x.n, x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      out.at(i, j) = (i == j ? 1 : 0) - static_cast<int>(x.at(i, j));
  return out;
}

Cokernel transition_cokernel(const ZeroOneMatrix& x1, const ZeroOneMatrix& x2) {
  if (x1.n != x2.n) throw Error(Errc::invalid_argument, "transition matrices of different sizes");
  return Cokernel(IntMatrix::hconcat(i_minus(x1), i_minus(x2)));
}

KPair k_groups_rank2(const FinAbGroup& c) {
  FinAbGroup k{2 * c.free_rank, c.factors};
  return KPair{k, k};
}

KPair rank1_ck_k(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::invalid_argument, "rank-1 matrix must be square");
  IntMatrix m = IntMatrix::identity(a.rows());
  const IntMatrix at = a.transposed();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) -= at.at(i, j);
  return KPair{Cokernel(m).group(), kernel(m)};
}

KPair kunneth(const KPair& x, const KPair& y) {
  KPair out;
  out.k0 = direct_sum(direct_sum(tensor(x.k0, y.k0), tensor(x.k1, y.k1)),
                      direct_sum(tor(x.k0, y.k1), tor(x.k1, y.k0)));
  out.k1 = direct_sum(direct_sum(tensor(x.k0, y.k1), tensor(x.k1, y.k0)),
                      direct_sum(tor(x.k0, y.k0), tor(x.k1, y.k1)));
  return out;
}

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Int order_of_unit(int q) {
  const Int q2m1 = Int(q) * q - 1;
  const Int cls = 3 * (Int(q) + 1);
  const Int via_class = q2m1 / gcd_int(q2m1, cls);
  const Int via_reduced = (Int(q) - 1) / gcd_int(Int(q) - 1, 3);
  if (via_class != via_reduced)
    throw Error(Errc::count_mismatch, "order-of-unit formulas disagree at q=" + std::to_string(q));
  return via_class;
}

UnitClassResult unit_class(std::size_t alphabet_size, const Cokernel& c, int q) {
  UnitClassResult r;
  r.generator = c.class_of_basis(0);
  for (std::size_t a = 1; a < alphabet_size; ++a)
    if (!(c.class_of_basis(a) == r.generator))
      throw Error(Errc::count_mismatch,
                  "generator classes differ in the cokernel (letter " + std::to_string(a) + ")");
  r.generator_generates = c.generates(r.generator);
  r.unit_alphabet = c.class_of(std::vector<Int>(alphabet_size, 1));
  if (!(r.unit_alphabet == c.scale(r.generator, 3 * Int(q))))
    throw Error(Errc::count_mismatch, "class of the all-ones vector is not 3q * g");
  r.unit_crossed = c.scale(r.unit_alphabet, Int(q) + 1);
  if (!(r.unit_crossed == c.scale(r.generator, 3 * (Int(q) + 1))))
    throw Error(Errc::count_mismatch, "crossed unit class is not 3(q+1) * g");
  r.q2_scaling = c.scale(r.generator, Int(q) * q) == r.generator;
  return r;
}

}  // namespace a2ck::ktheory
