#include <doctest.h>

#include <random>

#include "gradmult/kernels.hpp"
#include "gradmult/ideal.hpp"
#include "test_util.hpp"

using namespace gradmult;
using gradmult::test::naive_count_outside;
using gradmult::test::random_ideal;

TEST_CASE("scalar kernel equals the naive per-point scan") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<Coord> side(1, 9);
  for (int d = 1; d <= 4; ++d) {
    Ring R(d);
    for (int trial = 0; trial < 40; ++trial) {
      MonomialIdeal I = random_ideal(rng, R, 5, 6);
      Exponent box(d);
      for (auto& b : box) b = side(rng);
      auto pack = kern::pack_generators(I.gens(), box);
      CHECK(Int(kern::count_free_scalar(pack, box)) == naive_count_outside(I, box));
    }
  }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernel equals the scalar kernel") {
  if (kern::active_variant() != kern::Variant::avx2) return;  // no AVX2 CPU
  std::mt19937 rng(202);
  std::uniform_int_distribution<Coord> side(1, 14);
  for (int d = 1; d <= 4; ++d) {
    Ring R(d);
    for (int trial = 0; trial < 60; ++trial) {
      MonomialIdeal I = random_ideal(rng, R, 12, 8);
      Exponent box(d);
      for (auto& b : box) b = side(rng);
      auto pack = kern::pack_generators(I.gens(), box);
      CHECK(kern::count_free_avx2(pack, box) == kern::count_free_scalar(pack, box));
    }
  }
}
#endif

TEST_CASE("kernel edge cases") {
  Ring R(2);
  Exponent box = {4, 5};
  // No generators: the whole box is free.
  auto empty = kern::pack_generators({}, box);
  CHECK(kern::count_free(empty, box) == 20);
  // Unit ideal: nothing is free.
  auto unit = kern::pack_generators({Exponent{0, 0}}, box);
  CHECK(kern::count_free(unit, box) == 0);
  // Generators outside the box are dropped by packing.
  auto outside = kern::pack_generators({Exponent{4, 0}, Exponent{0, 7}}, box);
  CHECK(outside.count == 0);
}
