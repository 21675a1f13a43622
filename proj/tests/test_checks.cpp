#include <doctest.h>

#include <random>

#include "gradmult/checks.hpp"
#include "test_util.hpp"

using namespace gradmult;
using gradmult::test::point;
using gradmult::test::random_m_primary;

namespace {
const Ring R2(2);
const Ring R3(3);
}  // namespace

TEST_CASE("nilradical hypothesis checker") {
  CHECK(nilradical_hypothesis(MonomialIdeal(R2, {point({1, 1})})).verdict == Verdict::pass);
  CHECK(nilradical_hypothesis(MonomialIdeal(R2, {point({2, 0})})).verdict == Verdict::fail);
  CHECK(nilradical_hypothesis(MonomialIdeal(R2, {point({2, 0}), point({1, 1})})).verdict ==
        Verdict::pass);
  CHECK(nilradical_hypothesis(MonomialIdeal::zero(R2)).verdict == Verdict::pass);
  CHECK_THROWS_AS(nilradical_hypothesis(MonomialIdeal::unit(R2)), std::invalid_argument);
}

TEST_CASE("additivity along multiplication by x") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  CheckReport r = additivity_check(MonomialIdeal::zero(R2), point({1, 0}), {F},
                                   Strategy::exact_noetherian);
  CHECK(r.passed());
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].lhs == 1);  // e(R) = e(R) + e(R/(x)) = 1 + 0
  CHECK(r.entries[0].rhs == 1);
}

TEST_CASE("additivity for a quotient with embedded structure") {
  // Q = (x^2 y), f = y: Q:f = (x^2), Q+(f) = (y); all dimensions < 2 so the
  // degree-2 entries vanish on both sides.
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  CheckReport r = additivity_check(MonomialIdeal(R2, {point({2, 1})}), point({0, 1}), {F},
                                   Strategy::exact_noetherian);
  CHECK(r.passed());
  for (const auto& e : r.entries) {
    CHECK(e.lhs == 0);
    CHECK(e.rhs == 0);
  }
}

TEST_CASE("additivity with the unit monomial is trivial") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal(R2, {point({2, 0}), point({0, 3})}));
  CheckReport r = additivity_check(MonomialIdeal::zero(R2), point({0, 0}), {F},
                                   Strategy::exact_noetherian);
  CHECK(r.passed());
  CHECK(r.entries[0].lhs == 6);
}

TEST_CASE("additivity across a small (Q, f) corpus") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily G = GradedFamily::powers(MonomialIdeal(R2, {point({2, 0}), point({0, 3})}));
  std::vector<std::pair<MonomialIdeal, Exponent>> corpus = {
      {MonomialIdeal::zero(R2), point({1, 0})},
      {MonomialIdeal::zero(R2), point({0, 1})},
      {MonomialIdeal::zero(R2), point({2, 3})},
      {MonomialIdeal(R2, {point({1, 1})}), point({1, 0})},
      {MonomialIdeal(R2, {point({2, 1})}), point({0, 1})},
      {MonomialIdeal(R2, {point({2, 0})}), point({1, 0})},
  };
  for (const auto& [Q, f] : corpus) {
    CHECK(additivity_check(Q, f, {F}, Strategy::exact_noetherian).passed());
    CHECK(additivity_check(Q, f, {F, G}, Strategy::exact_noetherian).passed());
  }
}

TEST_CASE("associativity over Q = (xy)") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  CheckReport r = associativity_check(MonomialIdeal(R2, {point({1, 1})}), {F},
                                      Strategy::exact_noetherian);
  CHECK(r.passed());
  CHECK(r.verdict == Verdict::pass);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].lhs == 2);
  CHECK(r.entries[0].rhs == 2);
  CHECK(r.notes.at("nilradical_hypothesis") == std::string("pass"));
}

TEST_CASE("associativity over Q = (x^2 y) weights by localized lengths") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  CheckReport r = associativity_check(MonomialIdeal(R2, {point({2, 1})}), {F},
                                      Strategy::exact_noetherian);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].lhs == 3);
  CHECK(r.entries[0].rhs == 3);
  // The hypothesis fails here (the nilradical has full dimension), so the
  // equality is reported as evidence rather than a theorem instance.
  CHECK(r.notes.at("nilradical_hypothesis") == std::string("fail"));
  CHECK(r.verdict == Verdict::evidence_only);
  CHECK(r.passed());
}

TEST_CASE("associativity on an m-primary quotient degenerates") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  CheckReport r = associativity_check(MonomialIdeal(R2, {point({2, 0}), point({0, 2})}),
                                      {F}, Strategy::exact_noetherian);
  CHECK(r.passed());
  CHECK(r.notes.count("degenerate") == 1);
}

TEST_CASE("associativity in three variables over the triangle quotient") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R3));
  MonomialIdeal Q(R3, {point({1, 1, 0}), point({1, 0, 1}), point({0, 1, 1})});
  CheckReport r = associativity_check(Q, {F}, Strategy::exact_noetherian);
  CHECK(r.passed());
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].lhs == 3);  // three coordinate lines
}

TEST_CASE("minkowski inequalities for (m, (x^2,y^3))") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily G = GradedFamily::powers(MonomialIdeal(R2, {point({2, 0}), point({0, 3})}));
  CheckReport r =
      minkowski_check(F, G, MonomialIdeal::zero(R2), Strategy::exact_noetherian);
  CHECK(r.passed());
  CHECK(r.verdict == Verdict::pass);

  // The asymmetric instance has teeth: pairing the (iii) exponents the
  // wrong way around fails, so a side swap cannot hide.
  MultiplicityTable t = family_mixed_multiplicities(MonomialIdeal::zero(R2), {G, F},
                                                    Strategy::exact_noetherian);
  Rat eG = 6, eF = 1;
  Rat lhs = rat_pow(t.at({2, 0}), 2);  // e_{(2,0)}(G,F) = e(G) = 6
  CHECK(lhs > rat_pow(eG, 0) * rat_pow(eF, 2));  // swapped pairing violated
  CHECK(lhs <= rat_pow(eG, 2) * rat_pow(eF, 0));  // correct pairing holds
}

TEST_CASE("minkowski equalities for an equal pair") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal(R2, {point({2, 0}), point({0, 3})}));
  CheckReport r =
      minkowski_check(F, F, MonomialIdeal::zero(R2), Strategy::exact_noetherian);
  CHECK(r.passed());
  for (const auto& e : r.entries)
    if (e.label.rfind("(i)", 0) == 0 || e.label.rfind("(ii)", 0) == 0)
      CHECK(e.lhs == e.rhs);
}

TEST_CASE("minkowski for scaled families hits equality in (i)") {
  GradedFamily F = GradedFamily::powers(MonomialIdeal::maximal(R2));
  GradedFamily G = GradedFamily::scaled(MonomialIdeal::maximal(R2), 2);
  CheckReport r =
      minkowski_check(F, G, MonomialIdeal::zero(R2), Strategy::exact_noetherian);
  CHECK(r.passed());
  const auto& first = r.entries.front();
  CHECK(first.label == std::string("(i) i=1"));
  CHECK(first.lhs == first.rhs);  // (1/2)^2 = 1 * (1/4)
}

TEST_CASE("minkowski on a randomized m-primary corpus") {
  std::mt19937 rng(401);
  int done = 0;
  for (int trial = 0; done < 12 && trial < 40; ++trial) {
    const Ring& R = trial % 3 == 2 ? R3 : R2;
    MonomialIdeal A = random_m_primary(rng, R, 2, 3);
    MonomialIdeal B = random_m_primary(rng, R, 2, 3);
    CheckReport r = minkowski_check(GradedFamily::powers(A), GradedFamily::powers(B),
                                    MonomialIdeal::zero(R), Strategy::exact_noetherian);
    CHECK(r.passed());
    ++done;
  }
  CHECK(done == 12);
}
