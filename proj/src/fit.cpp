#include "gradmult/fit.hpp"

#include <algorithm>

namespace gradmult {

Poly newton_interpolate(const GridFn& f, int arity, int degree_bound,
                        const std::vector<long>& start) {
  const int n = degree_bound + 1;
  std::size_t points = 1;
  for (int i = 0; i < arity; ++i) points *= (std::size_t)n;

  std::vector<Int> tensor(points);
  std::vector<long> at(arity);
  for (std::size_t idx = 0; idx < points; ++idx) {
    std::size_t rest = idx;
    for (int i = arity - 1; i >= 0; --i) {
      at[i] = start[i] + (long)(rest % n);
      rest /= n;
    }
    tensor[idx] = f(at);
  }

  // Forward differences along each axis turn tensor[k] into Delta^k f(start);
  // descending index order keeps the in-place update reading unmodified
  // lower entries.
  std::size_t stride = 1;
  for (int axis = arity - 1; axis >= 0; --axis) {
    for (int step = 1; step <= degree_bound; ++step) {
      for (std::size_t idx = points; idx-- > 0;) {
        std::size_t pos = (idx / stride) % n;
        if (pos >= (std::size_t)step) tensor[idx] -= tensor[idx - stride];
      }
    }
    stride *= n;
  }

  Poly result(arity);
  std::vector<int> k(arity);
  for (std::size_t idx = 0; idx < points; ++idx) {
    std::size_t rest = idx;
    for (int i = arity - 1; i >= 0; --i) {
      k[i] = (int)(rest % n);
      rest /= n;
    }
    if (tensor[idx] == 0) continue;
    Poly basis = Poly::constant(arity, Rat(tensor[idx]));
    for (int i = 0; i < arity; ++i)
      basis = basis * Poly::binomial_basis(arity, i, start[i], k[i]);
    result = result + basis;
  }
  return result;
}

PolynomialFit fit_numerical_function(const GridFn& f, int arity, int degree_bound,
                                     std::vector<long> start, const FitOptions& options) {
  if (arity < 1) throw std::invalid_argument("fit arity must be >= 1");
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");

  std::map<std::vector<long>, Int> cache;
  GridFn memo = [&](const std::vector<long>& at) {
    auto it = cache.find(at);
    if (it != cache.end()) return it->second;
    Int v = f(at);
    cache.emplace(at, v);
    return v;
  };

  std::vector<long> offset = std::move(start);
  int tried = 0;
  for (;;) {
    ++tried;
    Poly first = newton_interpolate(memo, arity, degree_bound, offset);
    std::vector<long> shifted(offset);
    for (auto& v : shifted) ++v;
    Poly second = newton_interpolate(memo, arity, degree_bound, shifted);
    if (first == second && first.total_degree() <= degree_bound) {
      PolynomialFit fit;
      fit.offset = offset;
      fit.window = degree_bound;
      fit.poly = std::move(first);
      fit.windows_tried = tried;
      return fit;
    }
    long next_max = 0;
    for (auto& v : offset) {
      v *= 2;
      next_max = std::max(next_max, v);
    }
    if (next_max > options.cap) throw FitFailure(offset, std::move(first), std::move(second));
  }
}

}  // namespace gradmult
