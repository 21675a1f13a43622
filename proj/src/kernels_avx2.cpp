// AVX2 variant of the box-counting kernel. Batches 8 generators per
// iteration; lane layout and semantics match count_free_scalar exactly.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "gradmult/kernels.hpp"

namespace gradmult::kern {

namespace {

inline std::int32_t hmin_epi32(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i m = _mm_min_epi32(lo, hi);
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

}  // namespace

std::uint64_t count_free_avx2(const GenPack& pack, const Exponent& box) {
  const int d = pack.dim;
  for (int j = 0; j < d; ++j)
    if (box[j] <= 0) return 0;
  const std::int32_t cap = box[d - 1];
  const std::int32_t* last = pack.row(d - 1);
  const __m256i sentinel = _mm256_set1_epi32(GenPack::kSentinel);

  Exponent prefix(d > 1 ? d - 1 : 0, 0);
  std::uint64_t total = 0;
  for (;;) {
    __m256i min8 = sentinel;
    for (int l = 0; l < pack.padded; l += 8) {
      __m256i miss = _mm256_setzero_si256();
      for (int j = 0; j < d - 1; ++j) {
        __m256i g = _mm256_loadu_si256((const __m256i*)(pack.row(j) + l));
        __m256i a = _mm256_set1_epi32(prefix[j]);
        miss = _mm256_or_si256(miss, _mm256_cmpgt_epi32(g, a));
      }
      __m256i tail = _mm256_loadu_si256((const __m256i*)(last + l));
      __m256i cand = _mm256_blendv_epi8(tail, sentinel, miss);
      min8 = _mm256_min_epi32(min8, cand);
    }
    std::int32_t run = hmin_epi32(min8);
    total += (std::uint64_t)(run < cap ? run : cap);
    int j = d - 2;
    while (j >= 0) {
      if (++prefix[j] < box[j]) break;
      prefix[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return total;
}

}  // namespace gradmult::kern

#endif
