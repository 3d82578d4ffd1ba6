#pragma once

#include <memory>

#include "ktheory/abelian.hpp"
#include "shift/transition.hpp"

namespace a2ck::ktheory {

using shift::ZeroOneMatrix;

struct KPair {
  FinAbGroup k0, k1;
  friend bool operator==(const KPair&, const KPair&) = default;
  std::string str() const { return "(" + k0.str() + ", " + k1.str() + ")"; }
};

// I - X as an integer matrix.
IntMatrix i_minus(const ZeroOneMatrix& x);

// coker(I-X1 | I-X2): the group written on the transition matrices of either
// alphabet. Keeps the class map for the distinguished-element arithmetic.
Cokernel transition_cokernel(const ZeroOneMatrix& x1, const ZeroOneMatrix& x2);

// K-groups of the rank-2 algebra from C = Z^r + T: K0 = K1 = Z^{2r} + T.
KPair k_groups_rank2(const FinAbGroup& c);

// Rank-1 counterpart: K0 = coker(I - A^T), K1 = ker(I - A^T).
KPair rank1_ck_k(const IntMatrix& a);

// Graded Kunneth formula over f.g. abelian groups:
//   K0(x (x) y) = K0x(x)K0y + K1x(x)K1y + Tor(K0x,K1y) + Tor(K1x,K0y)
// and K1 with the gradings swapped.
KPair kunneth(const KPair& x, const KPair& y);

// Order of the unit class 3(q+1) in Z_{q^2-1}; checks the two equivalent
// closed forms (q^2-1)/gcd(q^2-1, 3(q+1)) and (q-1)/gcd(q-1, 3) agree.
Int order_of_unit(int q);

// Distinguished-element arithmetic over the tile alphabet: all generator
// classes must coincide (their common value g generates), the all-ones
// vector maps to 3q * g, and the (q+1)-fold unit to 3(q+1) * g.
struct UnitClassResult {
  CokerElement generator;        // common class g of the letters
  CokerElement unit_alphabet;    // class of sum over the alphabet = 3q * g
  CokerElement unit_crossed;     // (q+1) * unit_alphabet = 3(q+1) * g
  bool generator_generates = false;
  bool q2_scaling = false;       // q^2 * g == g
};
UnitClassResult unit_class(std::size_t alphabet_size, const Cokernel& c, int q);

}  // namespace a2ck::ktheory
