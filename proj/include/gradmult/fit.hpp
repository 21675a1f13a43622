#ifndef GRADMULT_FIT_HPP
#define GRADMULT_FIT_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "gradmult/polynomial.hpp"
#include "gradmult/rational.hpp"

namespace gradmult {

struct FitOptions {
  long cap = 64;  // failure once any offset coordinate would exceed this
};

/// Exact interpolation of a grid function that is eventually polynomial.
struct PolynomialFit {
  std::vector<long> offset;  // accepted window start
  int window = 0;            // per-axis degree bound D
  Poly poly;
  int windows_tried = 1;
};

/// Raised when two shifted windows still disagree at the offset cap; carries
/// the final disagreeing fits.
class FitFailure : public std::runtime_error {
 public:
  FitFailure(std::vector<long> offset, Poly first, Poly second)
      : std::runtime_error("not yet polynomial at cap"),
        offset(std::move(offset)),
        first(std::move(first)),
        second(std::move(second)) {}
  std::vector<long> offset;
  Poly first, second;
};

using GridFn = std::function<Int(const std::vector<long>&)>;

/// Single-window Newton finite-difference interpolation on the tensor grid
/// start + [0..D]^arity.
Poly newton_interpolate(const GridFn& f, int arity, int degree_bound,
                        const std::vector<long>& start);

/// Samples at `start`, re-fits at start + 1, and accepts only when both
/// coefficient maps agree and the total degree stays within the bound;
/// otherwise doubles the offset, failing past options.cap.
PolynomialFit fit_numerical_function(const GridFn& f, int arity, int degree_bound,
                                     std::vector<long> start, const FitOptions& options = {});

}  // namespace gradmult

#endif
