#include <doctest.h>

#include "gradmult/family.hpp"
#include "gradmult/length.hpp"
#include "test_util.hpp"

using namespace gradmult;
using gradmult::test::point;

namespace {
const Ring R2(2);
const Ring R3(3);

MonomialIdeal triangle() {
  return MonomialIdeal(R3, {point({1, 1, 0}), point({1, 0, 1}), point({0, 1, 1})});
}
}  // namespace

TEST_CASE("powers family") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  CHECK(F.term(0).is_unit());
  CHECK(F.term(3) == power(MonomialIdeal::maximal(R2), 3));
  CHECK(verify_graded(F, 8).passed());
  CHECK(verify_filtration(F, 8).passed());
}

TEST_CASE("truncation of a powers family is the family itself") {
  MonomialIdeal I(R2, {point({2, 0}), point({0, 3})});
  GradedFamily base = GradedFamily::powers(I);
  GradedFamily trunc = GradedFamily::truncated(1, base);
  for (long n = 0; n <= 6; ++n) CHECK(trunc.term(n) == base.term(n));
}

TEST_CASE("truncations grow with the index and stay inside the family") {
  GradedFamily base = GradedFamily::saturation(
      GradedFamily::powers(MonomialIdeal(R2, {point({2, 0}), point({1, 1})})));
  GradedFamily t1 = GradedFamily::truncated(1, base);
  GradedFamily t3 = GradedFamily::truncated(3, base);
  for (long n = 0; n <= 7; ++n) {
    CHECK(base.term(n).contains_ideal(t1.term(n)));
    CHECK(base.term(n).contains_ideal(t3.term(n)));
    CHECK(t3.term(n).contains_ideal(t1.term(n)));
  }
  CHECK(verify_graded(t3, 7).passed());
}

TEST_CASE("saturation family of x^n (x,y)^n is (x^n)") {
  MonomialIdeal A(R2, {point({2, 0}), point({1, 1})});
  GradedFamily S = GradedFamily::saturation(GradedFamily::powers(A));
  for (long n = 1; n <= 6; ++n)
    CHECK(S.term(n) == MonomialIdeal(R2, {point({(Coord)n, 0})}));
  CHECK(verify_graded(S, 6).passed());
}

TEST_CASE("symbolic powers of the triangle pick up xyz") {
  GradedFamily S = GradedFamily::symbolic_powers(triangle());
  MonomialIdeal s2 = S.term(2);
  Exponent xyz = point({1, 1, 1});
  CHECK(s2.contains(xyz));
  CHECK_FALSE(power(triangle(), 2).contains(xyz));
  CHECK(verify_graded(S, 6).passed());

  CHECK_THROWS_AS(GradedFamily::symbolic_powers(MonomialIdeal(R2, {point({2, 0})})),
                  std::invalid_argument);
}

TEST_CASE("scaled family is graded") {
  GradedFamily F = GradedFamily::scaled(MonomialIdeal::maximal(R2), 2);
  CHECK(F.term(4) == power(MonomialIdeal::maximal(R2), 2));
  CHECK(F.term(5) == power(MonomialIdeal::maximal(R2), 3));
  CHECK(verify_graded(F, 10).passed());
}

TEST_CASE("integral closure family") {
  MonomialIdeal I(R2, {point({2, 0}), point({0, 2})});
  GradedFamily F = GradedFamily::integral_closure_powers(I);
  CHECK(F.term(1).contains(point({1, 1})));
  CHECK(verify_graded(F, 6).passed());
}

TEST_CASE("product family sits inside the intersection of its parts") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily G = GradedFamily::powers(MonomialIdeal(R2, {point({2, 0}), point({0, 3})}));
  GradedFamily P = GradedFamily::product_family(F, G);
  for (long n = 1; n <= 5; ++n)
    CHECK(intersect(F.term(n), G.term(n)).contains_ideal(P.term(n)));
  CHECK(verify_graded(P, 6).passed());
}

TEST_CASE("corrupted table family fails verification with a witness") {
  MonomialIdeal m = MonomialIdeal::maximal(R2);
  // Term 2 misses m^2 entirely, so term(1)*term(1) is not inside it.
  GradedFamily bad = GradedFamily::table(
      R2, {m, MonomialIdeal(R2, {point({5, 0}), point({0, 5})}), power(m, 3)});
  CheckReport r = verify_graded(bad, 4);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front() == "(1,1)");
}

TEST_CASE("table families extend by products beyond the prefix") {
  MonomialIdeal I(R2, {point({2, 0}), point({0, 2})});
  GradedFamily T = GradedFamily::table(R2, {I});
  for (long n = 1; n <= 5; ++n) CHECK(T.term(n) == power(I, n));
}

TEST_CASE("linear growth of the saturation pair") {
  MonomialIdeal A(R2, {point({2, 0}), point({1, 1})});
  GradedFamily I = GradedFamily::powers(A);
  GradedFamily J = GradedFamily::saturation(I);
  auto w = linear_growth_search(J, I, 6, 8);
  REQUIRE(w.has_value());
  CHECK(w->c == 2);
}

TEST_CASE("m-primary pairs have linear growth") {
  MonomialIdeal I1(R2, {point({2, 0}), point({0, 2}), point({1, 1})});
  GradedFamily I = GradedFamily::powers(I1);
  GradedFamily J = GradedFamily::powers(MonomialIdeal::maximal(R2));
  auto w = linear_growth_search(J, I, 6, 6);
  CHECK(w.has_value());
}

TEST_CASE("negative control: (x) vs (x^2) has no linear growth") {
  GradedFamily J = GradedFamily::powers(MonomialIdeal(R2, {point({1, 0})}));
  GradedFamily I = GradedFamily::powers(MonomialIdeal(R2, {point({2, 0})}));
  CHECK_FALSE(linear_growth_search(J, I, 5, 6).has_value());
}

TEST_CASE("linear growth validates the containment precondition") {
  GradedFamily J = GradedFamily::powers(MonomialIdeal(R2, {point({2, 0})}));
  GradedFamily I = GradedFamily::powers(MonomialIdeal(R2, {point({1, 0})}));
  CHECK_THROWS_AS(linear_growth_search(J, I, 3, 4), std::invalid_argument);
}

TEST_CASE("noetherian periods") {
  CHECK(noetherian_period(GradedFamily::powers(MonomialIdeal::maximal(R2)), 12, 12) == 1);
  CHECK(noetherian_period(GradedFamily::scaled(MonomialIdeal::maximal(R2), 2), 12, 12) == 2);

  GradedFamily S = GradedFamily::symbolic_powers(triangle());
  auto q = noetherian_period(S, 6, 8);
  REQUIRE(q.has_value());
  // Oracle: the defining equality at the returned period.
  for (long n = 2; n * *q <= 8; ++n) CHECK(power(S.term(*q), n) == S.term(n * *q));
  CHECK(*q == 2);
}

TEST_CASE("killed families are term-wise images") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal(R2, {point({2, 0}), point({0, 3})}));
  GradedFamily K = GradedFamily::killed(F, {0});
  CHECK(K.ring().dim == 1);
  for (long n = 1; n <= 4; ++n) CHECK(K.term(n) == kill_variables(F.term(n), {0}));
}

TEST_CASE("composite families subsample and multiply") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily G = GradedFamily::powers(MonomialIdeal(R2, {point({2, 0}), point({0, 2})}));
  GradedFamily C = GradedFamily::composite({{F, 2}, {G, 1}});
  for (long n = 0; n <= 4; ++n)
    CHECK(C.term(n) == product(F.term(2 * n), G.term(n)));
}
