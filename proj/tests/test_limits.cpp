#include <doctest.h>

#include "gradmult/limits.hpp"
#include "gradmult/newton.hpp"
#include "test_util.hpp"

using namespace gradmult;
using gradmult::test::point;

namespace {
const Ring R2(2);

MonomialIdeal zero2() { return MonomialIdeal::zero(R2); }

MonomialIdeal ixy() { return MonomialIdeal(R2, {point({2, 0}), point({0, 3})}); }
}  // namespace

TEST_CASE("family G value of the half-speed maximal family is 1/8") {
  GradedFamily F = GradedFamily::scaled(MonomialIdeal::maximal(R2), 2);
  LimitEstimate est =
      family_G_value(zero2(), {F}, {1}, Strategy::exact_noetherian);
  CHECK(est.mode == Strategy::exact_noetherian);
  CHECK(est.period == 2);
  CHECK(est.value == Rat(1, 8));

  // Sequence samples approach the same value from the closed form
  // ceil(n/2)(ceil(n/2)+1)/2 / n^2.
  LimitEstimate seq = family_G_value(zero2(), {F}, {1}, Strategy::sequence);
  CHECK(seq.mode == Strategy::sequence);
  for (const auto& [m, v] : seq.samples) {
    long k = (m + 1) / 2;
    CHECK(v == Rat(Int(k) * (k + 1) / 2, Int(m) * m));
  }
}

TEST_CASE("powers families reduce to the fixed-ideal G") {
  GradedFamily F = GradedFamily::powers(ixy());
  LimitEstimate est = family_G_value(zero2(), {F}, {1}, Strategy::exact_noetherian);
  CHECK(est.period == 1);
  CHECK(est.value == 3);  // e = 6, G(1) = 6/2!

  LimitEstimate scaled = family_G_value(zero2(), {F}, {3}, Strategy::exact_noetherian);
  CHECK(scaled.value == 27);  // homogeneity: 3^2 * 3
}

TEST_CASE("integral closure family value equals the covolume") {
  MonomialIdeal I(R2, {point({3, 0}), point({0, 3}), point({1, 1})});
  GradedFamily F = GradedFamily::integral_closure_powers(I);
  LimitEstimate est = family_G_value(zero2(), {F}, {1}, Strategy::exact_noetherian);
  CHECK(est.mode == Strategy::exact_noetherian);
  CHECK(est.value == covolume(I));
  CHECK(est.value == 3);

  LimitEstimate seq = family_G_value(zero2(), {F}, {1}, Strategy::sequence);
  // lambda(R/closure(I^n)) / n^2 is already exactly 3 once the staircase
  // fills: check the trailing sample is close.
  Rat last = seq.samples.back().second;
  Rat diff = last - 3;
  if (diff < 0) diff = -diff;
  CHECK(diff <= Rat(1, 4));
}

TEST_CASE("family mixed multiplicities of (powers(m), scaled(m,2))") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily G = GradedFamily::scaled(MonomialIdeal::maximal(R2), 2);
  MultiplicityTable t =
      family_mixed_multiplicities(zero2(), {F, G}, Strategy::exact_noetherian);
  CHECK_FALSE(t.sequence_mode);
  CHECK(t.at({2, 0}) == 1);
  CHECK(t.at({1, 1}) == Rat(1, 2));
  CHECK(t.at({0, 2}) == Rat(1, 4));
}

TEST_CASE("diagonal family identity") {
  GradedFamily L = GradedFamily::scaled(ixy(), 2);
  MultiplicityTable mono =
      family_mixed_multiplicities(zero2(), {L}, Strategy::exact_noetherian);
  MultiplicityTable diag =
      family_mixed_multiplicities(zero2(), {L, L}, Strategy::exact_noetherian);
  for (const auto& [type, v] : diag.e) CHECK(v == mono.at({2}));
}

TEST_CASE("family tables of powers families agree with fixed-ideal tables") {
  MonomialIdeal A = MonomialIdeal::maximal(R2);
  MonomialIdeal B = ixy();
  MultiplicityTable fam = family_mixed_multiplicities(
      zero2(), {GradedFamily::powers(A), GradedFamily::powers(B)},
      Strategy::exact_noetherian);
  MultiplicityTable fixed = mixed_multiplicities(zero2(), {A, B});
  CHECK(fam.e == fixed.e);
}

TEST_CASE("sequence-mode family table carries the uncertainty flag") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  MultiplicityTable t = family_mixed_multiplicities(zero2(), {F}, Strategy::sequence);
  CHECK(t.sequence_mode);
}

TEST_CASE("non-negativity of family e-values on a small corpus") {
  std::vector<GradedFamily> corpus = {
      GradedFamily::powers(ixy()),
      GradedFamily::scaled(MonomialIdeal::maximal(R2), 3),
      GradedFamily::integral_closure_powers(
          MonomialIdeal(R2, {point({3, 0}), point({0, 3}), point({1, 1})})),
      GradedFamily::truncated(2, GradedFamily::powers(MonomialIdeal::maximal(R2)))};
  for (const auto& F : corpus)
    for (const auto& G : corpus) {
      MultiplicityTable t =
          family_mixed_multiplicities(zero2(), {F, G}, Strategy::exact_noetherian);
      for (const auto& [type, v] : t.e) CHECK(v >= 0);
    }
}

TEST_CASE("volume equals multiplicity for the half-speed family") {
  GradedFamily F = GradedFamily::scaled(MonomialIdeal::maximal(R2), 2);
  CheckReport r = volume_equals_multiplicity(zero2(), {F}, {2}, {2, 4, 8},
                                             Strategy::exact_noetherian);
  CHECK(r.passed());
  CHECK(r.verdict == Verdict::pass);
  for (const auto& e : r.entries) CHECK(e.lhs == Rat(1, 4));
}

TEST_CASE("volume equals multiplicity is constant for powers families") {
  GradedFamily F = GradedFamily::powers(ixy());
  CheckReport r =
      volume_equals_multiplicity(zero2(), {F}, {2}, {1, 2, 3}, Strategy::exact_noetherian);
  CHECK(r.passed());
  for (const auto& e : r.entries) CHECK(e.lhs == 6);
}

TEST_CASE("volume equals multiplicity for the closure family is constant 6") {
  MonomialIdeal I(R2, {point({3, 0}), point({0, 3}), point({1, 1})});
  GradedFamily F = GradedFamily::integral_closure_powers(I);
  CheckReport r =
      volume_equals_multiplicity(zero2(), {F}, {2}, {1, 2, 4}, Strategy::exact_noetherian);
  CHECK(r.passed());
  for (const auto& e : r.entries) CHECK(e.lhs == 6);
}

TEST_CASE("general family value: I = powers(m), J = powers((x))") {
  GradedFamily I = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily J = GradedFamily::powers(MonomialIdeal(R2, {point({1, 0})}));
  LimitEstimate est =
      general_family_G_value(I, {J}, 1, {1}, Strategy::exact_noetherian);
  CHECK(est.mode == Strategy::exact_noetherian);
  CHECK(est.value == Rat(1, 2));  // G(n0, n1) = n0^2 / 2
  CHECK(est.growth_c.has_value());

  LimitEstimate at23 = general_family_G_value(I, {J}, 2, {3}, Strategy::exact_noetherian);
  CHECK(at23.value == 2);

  LimitEstimate zero = general_family_G_value(I, {J}, 0, {1}, Strategy::exact_noetherian);
  CHECK(zero.value == 0);  // structural: G(0, n) = 0

  MultiplicityTable t =
      general_family_mixed_multiplicities(I, {J}, Strategy::exact_noetherian);
  CHECK(t.at({1, 0}) == 1);
  CHECK(t.at({0, 1}) == 0);
}

TEST_CASE("general family pipelines agree with sequence samples") {
  GradedFamily I = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily J = GradedFamily::powers(MonomialIdeal(R2, {point({1, 0})}));
  LimitEstimate seq = general_family_G_value(I, {J}, 1, {1}, Strategy::sequence);
  for (const auto& [m, v] : seq.samples)
    CHECK(v == Rat(Int(m) * (m + 1) / 2, Int(m) * m));  // exactly m(m+1)/2 / m^2
}

TEST_CASE("comparison corollary for powers families") {
  GradedFamily I = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily J = GradedFamily::powers(MonomialIdeal::maximal(R2));
  CheckReport r = comparison_check(I, {J}, Strategy::exact_noetherian);
  CHECK(r.passed());
  CHECK(r.exact_mode);
  // r = 1, d = 2: both sides are 1 for all types.
  for (const auto& e : r.entries) {
    CHECK(e.lhs == 1);
    CHECK(e.rhs == 1);
  }
}

TEST_CASE("comparison corollary mixes asymmetric families") {
  GradedFamily I = GradedFamily::powers(ixy());
  GradedFamily J = GradedFamily::powers(MonomialIdeal::maximal(R2));
  CheckReport r = comparison_check(I, {J}, Strategy::exact_noetherian);
  CHECK(r.passed());
  // Sanity: the instance is non-vacuous (entries differ across types).
  bool saw_distinct = false;
  for (const auto& a : r.entries)
    for (const auto& b : r.entries)
      if (a.lhs != b.lhs) saw_distinct = true;
  CHECK(saw_distinct);
}

TEST_CASE("comparison corollary r = 0 reproduces e_d") {
  GradedFamily I = GradedFamily::powers(ixy());
  CheckReport r = comparison_check(I, {}, Strategy::exact_noetherian);
  CHECK(r.passed());
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].lhs == 6);  // e_{(d)} = e_d(R; I) via the general table
}

TEST_CASE("double limit evidence for powers families") {
  GradedFamily I = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily J = GradedFamily::powers(MonomialIdeal(R2, {point({1, 0})}));
  CheckReport r = double_limit_check(I, {J}, 1, {1});
  CHECK(r.passed());
  CHECK(r.exact_mode);
  // Inner limits at period multiples are exactly the single value.
  int inner = 0;
  for (const auto& e : r.entries)
    if (e.label.rfind("inner-exact", 0) == 0) {
      CHECK(e.lhs == e.rhs);
      ++inner;
    }
  CHECK(inner == 3);
}

TEST_CASE("homogeneity of the family value in exact mode") {
  GradedFamily F = GradedFamily::scaled(MonomialIdeal::maximal(R2), 2);
  GradedFamily G = GradedFamily::powers(ixy());
  for (long lam = 1; lam <= 3; ++lam) {
    LimitEstimate base =
        family_G_value(zero2(), {F, G}, {1, 1}, Strategy::exact_noetherian);
    LimitEstimate scaled =
        family_G_value(zero2(), {F, G}, {lam, lam}, Strategy::exact_noetherian);
    CHECK(scaled.value == base.value * lam * lam);
  }
}

TEST_CASE("exact strategy falls back with a warning when no period exists") {
  // Symbolic powers of the triangle are not m-primary, so build a family
  // with no small period instead: a table family whose prefix breaks all
  // power relations within the horizon but stays graded.
  MonomialIdeal m = MonomialIdeal::maximal(R2);
  std::vector<MonomialIdeal> prefix;
  // term(n) = m^{ceil(n/3)} truncated oddly: graded but period 3 only.
  GradedFamily F = GradedFamily::scaled(m, 3);
  auto q = common_period({F}, 2, 12);
  CHECK_FALSE(q.has_value());
  LimitEstimate est = family_G_value(zero2(), {F}, {1}, Strategy::exact_noetherian,
                                     Settings{.q_max = 2});
  CHECK(est.mode == Strategy::sequence);
  CHECK(est.fallback_warning);
}
