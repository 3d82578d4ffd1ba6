#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktheory/snf.hpp"

namespace a2ck::ktheory {

// Finitely generated abelian group in canonical form: free rank plus the
// invariant-factor chain (each >= 2, d1 | d2 | ...). Equality of groups is
// decided only on this canonical data.
struct FinAbGroup {
  std::size_t free_rank = 0;
  std::vector<Int> factors;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
  bool is_trivial() const { return free_rank == 0 && factors.empty(); }
  std::string str() const;  // e.g. "Z^2 + Z_3 + Z_12", "0"

  static FinAbGroup free(std::size_t rank) { return FinAbGroup{rank, {}}; }
  static FinAbGroup cyclic(Int n);
  // Canonical form of a direct sum of cyclic groups of the given orders
  // (order 0 meaning a free summand); computed via the SNF of the diagonal
  // relation matrix, so no factorization is involved.
  static FinAbGroup from_cyclic_orders(std::size_t free_rank, std::vector<Int> orders);
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup tor(const FinAbGroup& a, const FinAbGroup& b);

// Element of a cokernel in canonical coordinates: one residue per torsion
// factor, one integer per free generator.
struct CokerElement {
  std::vector<Int> torsion;  // torsion[i] in [0, factors[i])
  std::vector<Int> free;
  friend bool operator==(const CokerElement&, const CokerElement&) = default;
  bool is_zero() const;
  std::string str() const;
};

// coker(A) = Z^rows / col-space(A), with the class map x -> canonical
// coordinates of x + im(A) obtained by transforming through U.
class Cokernel {
 public:
  explicit Cokernel(const IntMatrix& a);

  const FinAbGroup& group() const { return grp_; }
  CokerElement class_of(const std::vector<Int>& x) const;  // |x| == rows(A)
  CokerElement class_of_basis(std::size_t i) const;
  CokerElement zero() const;
  CokerElement scale(const CokerElement& e, const Int& k) const;
  CokerElement add(const CokerElement& a, const CokerElement& b) const;
  // True when e generates the whole (finite) cokernel.
  bool generates(const CokerElement& e) const;

 private:
  std::size_t m_ = 0;
  IntMatrix u_;
  std::vector<Int> diag_;  // full SNF diagonal incl. ones and zeros
  FinAbGroup grp_;
};

// ker(A) as an abstract group (free of rank cols - rank).
FinAbGroup kernel(const IntMatrix& a);

}  // namespace a2ck::ktheory
