#ifndef GRADMULT_LINALG_HPP
#define GRADMULT_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "gradmult/rational.hpp"

namespace gradmult {

/// Exact Gaussian elimination with partial pivoting by first nonzero.
/// Throws std::domain_error on a singular system.
inline std::vector<Rat> solve_linear_system(std::vector<std::vector<Rat>> A,
                                            std::vector<Rat> b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular linear system");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rat factor = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

}  // namespace gradmult

#endif
