#include <doctest.h>

#include <random>

#include "gradmult/length.hpp"
#include "test_util.hpp"

using namespace gradmult;
using gradmult::test::naive_count_outside;
using gradmult::test::point;
using gradmult::test::random_m_primary;

namespace {
const Ring R2(2);
const Ring R3(3);
}  // namespace

TEST_CASE("colength basics") {
  CHECK(colength(MonomialIdeal::maximal(R2)) == 1);
  CHECK(colength(MonomialIdeal(R2, {point({2, 0}), point({0, 3})})) == 6);
  CHECK(colength(MonomialIdeal::unit(R2)) == 0);
  CHECK_THROWS_AS(colength(MonomialIdeal(R2, {point({1, 1})})), std::domain_error);
}

TEST_CASE("colength of maximal-ideal powers has the closed form") {
  MonomialIdeal m = MonomialIdeal::maximal(R2);
  for (long k = 1; k <= 20; ++k) {
    MonomialIdeal mk = power(m, k);
    Int expect = Int(k) * (k + 1) / 2;
    CHECK(colength(mk) == expect);
    CHECK(naive_count_outside(mk, pure_power_bounds(mk)) == expect);
  }
}

TEST_CASE("colength equals naive scan on random m-primary ideals") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Ring& R = trial % 2 ? R2 : R3;
    MonomialIdeal I = random_m_primary(rng, R, 3, 6);
    CHECK(colength(I) == naive_count_outside(I, pure_power_bounds(I)));
  }
}

TEST_CASE("module colength") {
  MonomialIdeal Q(R2, {point({1, 1})});
  MonomialIdeal m = MonomialIdeal::maximal(R2);
  for (long n = 1; n <= 8; ++n)
    CHECK(module_colength(Q, power(m, n)) == Int(2 * n - 1));
  CHECK(module_colength(MonomialIdeal::unit(R2), power(m, 3)) == 0);
  CHECK(module_colength(MonomialIdeal::zero(R2), power(m, 3)) == colength(power(m, 3)));
  CHECK_THROWS_AS(module_colength(Q, MonomialIdeal(R2, {point({1, 0})})), std::domain_error);
}

TEST_CASE("relative length examples") {
  MonomialIdeal x(R2, {point({1, 0})});
  MonomialIdeal m = MonomialIdeal::maximal(R2);
  CHECK(relative_length(x, m, 1) == 1);

  for (long k = 1; k <= 6; ++k) {
    MonomialIdeal xn(R2, {point({4, 0})});
    CHECK(relative_length(xn, power(m, k), k) == Int(k) * (k + 1) / 2);
  }
  MonomialIdeal I(R2, {point({2, 0}), point({0, 3})});
  CHECK(relative_length(MonomialIdeal::unit(R2), I) == colength(I));
  CHECK_THROWS_AS(relative_length(x, x, std::nullopt), std::domain_error);
}

TEST_CASE("relative length is certificate independent") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialIdeal I = random_m_primary(rng, R2, 2, 4);
    MonomialIdeal J = gradmult::test::random_ideal(rng, R2, 3, 4);
    long c = default_certificate(I);
    Length base = relative_length(J, I, c);
    CHECK(relative_length(J, I, c + 1) == base);
    CHECK(relative_length(J, I, c + 3) == base);
    CHECK(relative_length(J, I) == base);
  }
}

TEST_CASE("rejects an invalid certificate") {
  MonomialIdeal I(R2, {point({2, 0}), point({0, 2})});
  MonomialIdeal J(R2, {point({1, 0})});
  // m^1 is not inside I, so c = 1 must be refused.
  CHECK_THROWS_AS(relative_length(J, I, 1), std::invalid_argument);
}

TEST_CASE("localized length") {
  CHECK(localized_length(MonomialIdeal(R2, {point({1, 1})}), {0}) == 1);
  CHECK(localized_length(MonomialIdeal(R2, {point({2, 1})}), {0}) == 2);
  MonomialIdeal E(R3, {point({1, 1, 0}), point({1, 0, 1}), point({0, 1, 1})});
  CHECK(localized_length(E, {0, 1}) == 1);
  CHECK_THROWS_AS(localized_length(E, {0}), std::invalid_argument);
}

TEST_CASE("colength additivity and monotonicity") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialIdeal I = random_m_primary(rng, R2, 2, 5);
    MonomialIdeal J = sum(I, gradmult::test::random_ideal(rng, R2, 2, 5));
    // I inside J: colength(I) = colength(J) + #(box points in J \ I).
    Exponent box = pure_power_bounds(I);
    Int diff = 0;
    Exponent a(2);
    for (a[0] = 0; a[0] < box[0]; ++a[0])
      for (a[1] = 0; a[1] < box[1]; ++a[1])
        if (J.contains(a) && !I.contains(a)) ++diff;
    CHECK(colength(I) == colength(J) + diff);
    CHECK(colength(I) >= colength(J));
  }
}
