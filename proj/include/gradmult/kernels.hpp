#ifndef GRADMULT_KERNELS_HPP
#define GRADMULT_KERNELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gradmult/ring.hpp"

namespace gradmult::kern {

/// Generators in structure-of-arrays layout, padded to the SIMD batch width
/// with sentinel coordinates that can never dominate a point in the box.
struct GenPack {
  int dim = 0;
  int count = 0;
  int padded = 0;
  // lane(j, l) = coordinate j of generator l; lanes of index >= count hold
  // the sentinel.
  std::vector<std::int32_t> lanes;

  static constexpr std::int32_t kSentinel = INT32_MAX;

  const std::int32_t* row(int j) const { return lanes.data() + (std::size_t)j * padded; }
};

/// Packs the generators relevant to the half-open box [0, box): generators
/// with any coordinate >= box_i dominate nothing inside and are dropped.
GenPack pack_generators(const std::vector<Exponent>& gens, const Exponent& box);

/// Number of points a in the half-open box [0, box) dominated by no packed
/// generator. Aggregates along the last axis: for each prefix
/// (a_0..a_{d-2}) the free run is min over prefix-dominating generators of
/// their last coordinate, clamped to the box.
std::uint64_t count_free_scalar(const GenPack& pack, const Exponent& box);

#if defined(__x86_64__) || defined(_M_X64)
std::uint64_t count_free_avx2(const GenPack& pack, const Exponent& box);
#endif

enum class Variant { scalar, avx2 };

/// Kernel selected at load time: AVX2 when the CPU supports it, else scalar.
/// Environment variable GRADMULT_KERNEL=scalar|avx2 overrides.
Variant active_variant();
const char* variant_name(Variant v);

/// Dispatching entry point used by the length module.
std::uint64_t count_free(const GenPack& pack, const Exponent& box);

}  // namespace gradmult::kern

#endif
