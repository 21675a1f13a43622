#include "gradmult/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gradmult::kern {

namespace {
constexpr int kBatch = 8;
}

GenPack pack_generators(const std::vector<Exponent>& gens, const Exponent& box) {
  GenPack p;
  p.dim = (int)box.size();
  std::vector<const Exponent*> kept;
  for (const auto& g : gens) {
    bool inside = true;
    for (int j = 0; j < p.dim; ++j)
      if (g[j] >= box[j]) {
        inside = false;
        break;
      }
    if (inside) kept.push_back(&g);
  }
  p.count = (int)kept.size();
  p.padded = std::max(kBatch, ((p.count + kBatch - 1) / kBatch) * kBatch);
  p.lanes.assign((std::size_t)p.dim * p.padded, GenPack::kSentinel);
  for (int l = 0; l < p.count; ++l)
    for (int j = 0; j < p.dim; ++j) p.lanes[(std::size_t)j * p.padded + l] = (*kept[l])[j];
  return p;
}

std::uint64_t count_free_scalar(const GenPack& pack, const Exponent& box) {
  const int d = pack.dim;
  for (int j = 0; j < d; ++j)
    if (box[j] <= 0) return 0;
  const std::int64_t cap = box[d - 1];
  const std::int32_t* last = pack.row(d - 1);

  Exponent prefix(d > 1 ? d - 1 : 0, 0);
  std::uint64_t total = 0;
  for (;;) {
    std::int64_t run = cap;
    for (int l = 0; l < pack.count; ++l) {
      bool dom = true;
      for (int j = 0; j < d - 1; ++j)
        if (pack.row(j)[l] > prefix[j]) {
          dom = false;
          break;
        }
      if (dom && last[l] < run) run = last[l];
    }
    total += (std::uint64_t)run;
    // Odometer over the prefix box.
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

Variant active_variant() {
  static Variant v = [] {
    if (const char* env = std::getenv("GRADMULT_KERNEL")) {
      std::string s(env);
      if (s == "scalar") return Variant::scalar;
      if (s == "avx2") return Variant::avx2;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Variant::avx2;
#endif
    return Variant::scalar;
  }();
  return v;
}

const char* variant_name(Variant v) {
  return v == Variant::avx2 ? "avx2" : "scalar";
}

std::uint64_t count_free(const GenPack& pack, const Exponent& box) {
#if defined(__x86_64__) || defined(_M_X64)
  if (active_variant() == Variant::avx2) return count_free_avx2(pack, box);
#endif
  return count_free_scalar(pack, box);
}

}  // namespace gradmult::kern
