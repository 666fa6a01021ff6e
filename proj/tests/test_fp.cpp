#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mggs/errors.hpp"
#include "mggs/fp.hpp"

using namespace mggs;

namespace {

const FpVec kB1{13, {1, 2, 11, 3, 12, 10, 10, 12, 3, 11, 2, 1}};

FpMat example3_space() { return FpMat(13, 12, {kB1, perm_apply(kB1, Unit(3, 13)), perm_apply(kB1, Unit(9, 13))}); }

FpVec random_vec(std::mt19937_64& rng, Residue p, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> d(0, p - 1);
  FpVec v(p, n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, d(rng));
  return v;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  CHECK(reduce(-1, 5) == 4);
  CHECK(mul_mod(4, 4, 5) == 1);
  CHECK(inv_mod(3, 7) == 5);
  CHECK(pow_mod(2, 10, 13) == 10);
  CHECK(unit_order(5, 13) == 4);
  CHECK(unit_order(12, 13) == 2);
  CHECK_THROWS_AS(inv_mod(0, 7), DomainError);
  CHECK_THROWS_AS(require_odd_prime(2), DomainError);
  CHECK_THROWS_AS(require_odd_prime(9), DomainError);
  CHECK_THROWS_AS(Unit(0, 5), DomainError);
  CHECK((FpScalar(3, 5) * FpScalar(4, 5)).value() == 2);
  CHECK((-FpScalar(1, 5)).value() == 4);
}

TEST_CASE("perm_apply matches the index convention") {
  CHECK(perm_apply(kB1, Unit(5, 13)) == FpVec(13, {12, 11, 2, 10, 1, 3, 3, 1, 10, 2, 11, 12}));
  CHECK(perm_apply(kB1, Unit(5, 13)) == -kB1);
  CHECK(perm_apply(kB1, Unit(1, 13)) == kB1);
  CHECK(perm_apply(FpVec(5, {1, 2, 2, 1}), Unit(4, 5)) == FpVec(5, {1, 2, 2, 1}));
  CHECK_THROWS_AS(perm_apply(FpVec(5, {1, 2, 3}), Unit(2, 5)), DimensionError);
}

TEST_CASE("perm_apply is an action and a permutation") {
  for (Residue p : {3u, 5u, 7u}) {
    // exhaustive over units, over all basis vectors (linearity covers the rest)
    for (Residue u1 = 1; u1 < p; ++u1)
      for (Residue u2 = 1; u2 < p; ++u2)
        for (std::size_t i = 0; i + 1 < p; ++i) {
          const FpVec e = FpVec::unit_vector(p, p - 1, i);
          CHECK(perm_apply(perm_apply(e, Unit(u1, p)), Unit(u2, p)) == perm_apply(e, Unit(u1 * u2, p)));
        }
    for (Residue u = 1; u < p; ++u) {
      FpVec idx(p, p - 1);
      for (std::size_t i = 0; i + 1 < p; ++i) idx.set(i, static_cast<std::int64_t>(i + 1));
      auto w = perm_apply(idx, Unit(u, p)).entries();
      std::sort(w.begin(), w.end());
      CHECK(w == idx.entries());
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const FpVec v = random_vec(rng, 13, 12);
    const Unit u1(1 + rng() % 12, 13), u2(1 + rng() % 12, 13);
    CHECK(perm_apply(perm_apply(v, u1), u2) == perm_apply(v, u1 * u2));
  }
}

TEST_CASE("row reduction") {
  const FpMat a(5, 4, {FpVec(5, {1, 2, 2, 1}), FpVec(5, {2, 4, 4, 2}), FpVec(5, {0, 1, 0, 0})});
  CHECK(a.rank() == 2);
  CHECK(a.rref() == a.rref().rref());
  CHECK(a.spans(FpVec(5, {1, 3, 2, 1})));
  CHECK_FALSE(a.spans(FpVec(5, {0, 0, 1, 0})));

  const FpMat e = example3_space();
  CHECK(e.rank() == 3);
  CHECK(e.rref() == e.rref().rref());
  const auto x = e.coordinates(kB1 + e.row(2).scaled(4));
  REQUIRE(x.has_value());
  CHECK(*x == FpVec(13, {1, 0, 4}));
  CHECK_FALSE(e.coordinates(FpVec::unit_vector(13, 12, 0)).has_value());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FpVec> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(random_vec(rng, 7, 6));
    const FpMat m(7, 6, rows);
    CHECK(m.rref() == m.rref().rref());
    CHECK(m.rref().rank() == m.rank());
  }
}

TEST_CASE("row_space_equal") {
  const FpMat a(5, 4, {FpVec(5, {1, 2, 2, 1})});
  CHECK(row_space_equal(a, a));
  CHECK(row_space_equal(a, FpMat(5, 4, {FpVec(5, {2, 4, 4, 2})})));
  CHECK_FALSE(row_space_equal(a, FpMat(5, 4, {FpVec(5, {2, 1, 1, 2})})));
  CHECK_THROWS_AS(row_space_equal(a, FpMat(5, 3, {FpVec(5, {1, 1, 1})})), DimensionError);
}

TEST_CASE("scalar_action") {
  const FpMat e = example3_space();
  const auto l5 = scalar_action(e, Unit(5, 13));
  REQUIRE(l5.has_value());
  CHECK(l5->value() == 12);
  REQUIRE(scalar_action(e, Unit(1, 13)).has_value());
  CHECK(scalar_action(e, Unit(1, 13))->value() == 1);
  CHECK_FALSE(scalar_action(e, Unit(3, 13)).has_value());

  // scalar action implies invariance of the row space
  for (Residue u = 1; u < 13; ++u)
    if (scalar_action(e, Unit(u, 13))) CHECK(row_space_equal(e, perm_apply(e, Unit(u, 13))));
}

TEST_CASE("unit_subgroup_generated") {
  const std::vector<Unit> g12{Unit(12, 13)};
  CHECK(unit_subgroup_generated(13, g12) == std::vector<Unit>{Unit(1, 13), Unit(12, 13)});
  CHECK(unit_subgroup_generated(5, {}) == std::vector<Unit>{Unit(1, 5)});
  const std::vector<Unit> g3{Unit(3, 7)};
  CHECK(unit_subgroup_generated(7, g3).size() == 6);
  CHECK(all_units(7).size() == 6);
}
