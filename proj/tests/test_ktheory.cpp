#include <doctest.h>

#include <random>

#include "ktheory/abelian.hpp"
#include "ktheory/kcompute.hpp"
#include "ktheory/minors_oracle.hpp"

using namespace a2ck;
using namespace a2ck::ktheory;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

// the paper-facing 3x3 rank-1 pattern
IntMatrix a0() { return from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}}); }

}  // namespace

TEST_CASE("SNF of the zero matrix") {
  IntMatrix z(3, 4);
  auto r = smith_normal_form(z);
  CHECK(r.rank == 0);
  for (const auto& d : r.diag) CHECK(d == 0);
}

TEST_CASE("SNF of I - A0^T has invariant factors (1,1) and rank 2") {
  // frozen from the determinant-divisor oracle: 1x1 minors gcd 1, 2x2 gcd 1,
  // 3x3 determinant 0
  IntMatrix m = IntMatrix::identity(3);
  auto at = a0().transposed();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) -= at.at(i, j);
  auto r = smith_normal_form(m);
  CHECK(r.rank == 2);
  CHECK(r.diag[0] == 1);
  CHECK(r.diag[1] == 1);
  CHECK(r.diag[2] == 0);
  auto oracle = invariant_factors_by_minors(m);
  REQUIRE(oracle.size() == 2);
  CHECK(oracle[0] == 1);
  CHECK(oracle[1] == 1);
}

TEST_CASE("SNF agrees with the minors oracle on 200 random matrices") {
  CHECK_NOTHROW((void)snf_minors_crosscheck(200, 0x5eed));
}

TEST_CASE("SNF transforms are unimodular (independent determinant route)") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = static_cast<int>(rng() % 19) - 9;
    auto r = smith_normal_form(a);
    const Int du = determinant_bareiss(r.U);
    const Int dv = determinant_bareiss(r.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(du == r.det_u);
    CHECK(dv == r.det_v);
    CHECK(r.U.mul(a).mul(r.V) == r.S);
  }
}

TEST_CASE("cokernel and kernel basics") {
  CHECK(Cokernel(from_rows({{2}})).group() == FinAbGroup::cyclic(2));
  IntMatrix m = IntMatrix::identity(3);
  auto at = a0().transposed();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) -= at.at(i, j);
  CHECK(Cokernel(m).group() == FinAbGroup::free(1));  // Z
  CHECK(kernel(m) == FinAbGroup::free(1));            // Z
  CHECK_THROWS_AS((void)Cokernel(m).class_of({1, 2}), Error);  // dimension mismatch
}

TEST_CASE("generic presentation a_i = q^2 a_{i+1}, a_i = q^2 a_{i-1}") {
  for (int q = 2; q <= 16; ++q) {
    const Int s = Int(q) * q;
    IntMatrix rel(3, 6);
    for (int i = 0; i < 3; ++i) {
      rel.at(i, i) = 1;
      rel.at((i + 1) % 3, i) = -s;
      rel.at(i, 3 + i) = 1;
      rel.at((i + 2) % 3, 3 + i) = -s;
    }
    CHECK(Cokernel(rel).group() == FinAbGroup::cyclic(s - 1));
  }
}

TEST_CASE("k-groups from the coarse invariant") {
  CHECK(k_groups_rank2(FinAbGroup::cyclic(3)) ==
        KPair{FinAbGroup::cyclic(3), FinAbGroup::cyclic(3)});
  CHECK(k_groups_rank2(FinAbGroup::free(1)) == KPair{FinAbGroup::free(2), FinAbGroup::free(2)});
  const FinAbGroup mixed = direct_sum(FinAbGroup::free(1), FinAbGroup::cyclic(2));
  CHECK(k_groups_rank2(mixed) ==
        KPair{direct_sum(FinAbGroup::free(2), FinAbGroup::cyclic(2)),
              direct_sum(FinAbGroup::free(2), FinAbGroup::cyclic(2))});
}

TEST_CASE("rank-1 K-groups") {
  auto ka0 = rank1_ck_k(a0());
  CHECK(ka0 == KPair{FinAbGroup::free(1), FinAbGroup::free(1)});

  for (int n : {2, 4, 5}) {
    IntMatrix ones(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ones.at(i, j) = 1;
    CHECK(rank1_ck_k(ones) == KPair{FinAbGroup::cyclic(n - 1), FinAbGroup{}});
  }
  auto id = rank1_ck_k(IntMatrix::identity(3));
  CHECK(id == KPair{FinAbGroup::free(3), FinAbGroup::free(3)});
}

TEST_CASE("Kunneth formula on the named examples") {
  const KPair o4{FinAbGroup::cyclic(3), FinAbGroup{}};
  CHECK(kunneth(o4, o4) == KPair{FinAbGroup::cyclic(3), FinAbGroup::cyclic(3)});
  const KPair a0k{FinAbGroup::free(1), FinAbGroup::free(1)};
  CHECK(kunneth(a0k, o4) == KPair{FinAbGroup::cyclic(3), FinAbGroup::cyclic(3)});
  // (Z, 0) is the unit
  const KPair unit{FinAbGroup::free(1), FinAbGroup{}};
  const KPair y{direct_sum(FinAbGroup::free(2), FinAbGroup::cyclic(6)), FinAbGroup::cyclic(4)};
  CHECK(kunneth(unit, y) == y);
}

TEST_CASE("Kunneth is commutative and associative on random groups") {
  std::mt19937_64 rng(777);
  auto rnd_group = [&] {
    static const int orders[] = {2, 3, 4, 6, 8, 9, 12};
    std::vector<Int> f;
    const int nf = static_cast<int>(rng() % 3);
    for (int k = 0; k < nf; ++k) f.push_back(orders[rng() % 7]);
    return FinAbGroup::from_cyclic_orders(rng() % 3, f);
  };
  for (int t = 0; t < 30; ++t) {
    const KPair x{rnd_group(), rnd_group()};
    const KPair y{rnd_group(), rnd_group()};
    const KPair z{rnd_group(), rnd_group()};
    CHECK(kunneth(x, y) == kunneth(y, x));
    CHECK(kunneth(kunneth(x, y), z) == kunneth(x, kunneth(y, z)));
  }
}

TEST_CASE("canonical invariant factors from cyclic orders") {
  auto g = FinAbGroup::from_cyclic_orders(0, {Int(2), Int(3)});
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0] == 6);
  auto h = FinAbGroup::from_cyclic_orders(0, {Int(4), Int(6)});
  REQUIRE(h.factors.size() == 2);
  CHECK(h.factors[0] == 2);
  CHECK(h.factors[1] == 12);
  CHECK(FinAbGroup::from_cyclic_orders(1, {Int(1)}) == FinAbGroup::free(1));
}

TEST_CASE("order of the unit class") {
  CHECK(order_of_unit(2) == 1);
  CHECK(order_of_unit(5) == 4);
  CHECK(order_of_unit(7) == 2);
  for (int q = 2; q <= 16; ++q) CHECK_NOTHROW((void)order_of_unit(q));
}

TEST_CASE("congruences behind the unit class") {
  for (int q = 2; q <= 16; ++q) {
    const Int mod = Int(q) * q - 1;
    Int q5 = 1;
    for (int k = 0; k < 5; ++k) q5 *= q;
    CHECK((3 * q5 - 3 * q) % mod == 0);
    CHECK(((Int(q) + 1) * (Int(q) * q + q + 1) - 3 * (Int(q) + 1)) % mod == 0);
  }
}
