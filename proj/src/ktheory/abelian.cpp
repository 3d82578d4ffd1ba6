#include "ktheory/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace a2ck::ktheory {

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

std::string FinAbGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    os << "Z";
  } else if (free_rank > 1) {
    sep();
    os << "Z^" << free_rank;
  }
  for (const Int& d : factors) {
    sep();
    os << "Z_" << d;
  }
  return os.str();
}

FinAbGroup FinAbGroup::cyclic(Int n) {
  if (n < 0) n = -n;
  if (n == 0) return free(1);
  if (n == 1) return FinAbGroup{};
  return FinAbGroup{0, {std::move(n)}};
}

FinAbGroup FinAbGroup::from_cyclic_orders(std::size_t free_rank, std::vector<Int> orders) {
  std::vector<Int> nontrivial;
  for (Int& d : orders) {
    if (d < 0) d = -d;
    if (d == 0)
      ++free_rank;
    else if (d > 1)
      nontrivial.push_back(std::move(d));
  }
  FinAbGroup g;
  g.free_rank = free_rank;
  if (nontrivial.empty()) return g;
  IntMatrix rel(nontrivial.size(), nontrivial.size());
  for (std::size_t i = 0; i < nontrivial.size(); ++i) rel.at(i, i) = nontrivial[i];
  for (const Int& d : smith_normal_form(rel).diag)
    if (d > 1) g.factors.push_back(d);
  return g;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Int> orders = a.factors;
  orders.insert(orders.end(), b.factors.begin(), b.factors.end());
  return FinAbGroup::from_cyclic_orders(a.free_rank + b.free_rank, std::move(orders));
}

FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Int> orders;
  for (const Int& d : a.factors)
    for (std::size_t s = 0; s < b.free_rank; ++s) orders.push_back(d);
  for (const Int& e : b.factors)
    for (std::size_t s = 0; s < a.free_rank; ++s) orders.push_back(e);
  for (const Int& d : a.factors)
    for (const Int& e : b.factors) orders.push_back(gcd_int(d, e));
  return FinAbGroup::from_cyclic_orders(a.free_rank * b.free_rank, std::move(orders));
}

FinAbGroup tor(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Int> orders;
  for (const Int& d : a.factors)
    for (const Int& e : b.factors) orders.push_back(gcd_int(d, e));
  return FinAbGroup::from_cyclic_orders(0, std::move(orders));
}

bool CokerElement::is_zero() const {
  auto zero = [](const Int& x) { return x == 0; };
  return std::all_of(torsion.begin(), torsion.end(), zero) &&
         std::all_of(free.begin(), free.end(), zero);
}

std::string CokerElement::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
  if (!free.empty()) {
    os << ";";
    for (std::size_t i = 0; i < free.size(); ++i) os << (i ? "," : "") << free[i];
  }
  os << ")";
  return os.str();
}

Cokernel::Cokernel(const IntMatrix& a) {
  m_ = a.rows();
  SNFResult snf = smith_normal_form(a);
  u_ = std::move(snf.U);
  diag_ = std::move(snf.diag);
  diag_.resize(m_, 0);  // rows beyond min(m,n) are free
  grp_.free_rank = m_ - snf.rank;
  for (const Int& d : diag_)
    if (d > 1) grp_.factors.push_back(d);
}

CokerElement Cokernel::class_of(const std::vector<Int>& x) const {
  if (x.size() != m_)
    throw Error(Errc::invalid_argument, "class map: vector length " + std::to_string(x.size()) +
                                            " != " + std::to_string(m_));
  CokerElement e;
  for (std::size_t i = 0; i < m_; ++i) {
    Int y = 0;
    for (std::size_t j = 0; j < m_; ++j)
      if (u_.at(i, j) != 0 && x[j] != 0) y += u_.at(i, j) * x[j];
    if (diag_[i] == 0) {
      e.free.push_back(std::move(y));
    } else if (diag_[i] > 1) {
      Int r = y % diag_[i];
      if (r < 0) r += diag_[i];
      e.torsion.push_back(std::move(r));
    }
    // diag 1: coordinate dies
  }
  return e;
}

CokerElement Cokernel::class_of_basis(std::size_t i) const {
  std::vector<Int> x(m_, 0);
  x.at(i) = 1;
  return class_of(x);
}

CokerElement Cokernel::zero() const {
  CokerElement e;
  e.torsion.assign(grp_.factors.size(), 0);
  e.free.assign(grp_.free_rank, 0);
  return e;
}

CokerElement Cokernel::scale(const CokerElement& e, const Int& k) const {
  CokerElement out = e;
  for (std::size_t i = 0; i < out.torsion.size(); ++i) {
    Int r = (out.torsion[i] * k) % grp_.factors[i];
    if (r < 0) r += grp_.factors[i];
    out.torsion[i] = std::move(r);
  }
  for (auto& f : out.free) f *= k;
  return out;
}

CokerElement Cokernel::add(const CokerElement& a, const CokerElement& b) const {
  CokerElement out = a;
  for (std::size_t i = 0; i < out.torsion.size(); ++i)
    out.torsion[i] = (out.torsion[i] + b.torsion[i]) % grp_.factors[i];
  for (std::size_t i = 0; i < out.free.size(); ++i) out.free[i] += b.free[i];
  return out;
}

bool Cokernel::generates(const CokerElement& e) const {
  if (grp_.free_rank != 0) return false;
  Int order = 1, total = 1;
  for (std::size_t i = 0; i < grp_.factors.size(); ++i) {
    const Int& d = grp_.factors[i];
    Int o = d / gcd_int(d, e.torsion[i]);
    order = order / gcd_int(order, o) * o;  // lcm
    total *= d;
  }
  return order == total;
}

FinAbGroup kernel(const IntMatrix& a) {
  return FinAbGroup::free(a.cols() - smith_normal_form(a).rank);
}

}  // namespace a2ck::ktheory
