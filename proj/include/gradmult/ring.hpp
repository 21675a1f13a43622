#ifndef GRADMULT_RING_HPP
#define GRADMULT_RING_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradmult {

using Coord = std::int32_t;

/// Exponent vector of a monomial; length equals the ambient dimension.
using Exponent = std::vector<Coord>;

inline Coord total_degree(const Exponent& a) {
  Coord s = 0;
  for (Coord c : a) s += c;
  return s;
}

inline bool dominates(const Exponent& lo, const Exponent& hi) {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return false;
  return true;
}

inline Exponent coord_sum(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponent coord_max(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// The polynomial ring k[x_1..x_d] localized at (x_1,..,x_d); lengths of
/// monomial quotients are lattice-point counts.
struct Ring {
  int dim = 0;
  std::vector<std::string> vars;

  Ring() = default;
  explicit Ring(int d) : dim(d) {
    if (d < 1) throw std::invalid_argument("ring dimension must be >= 1");
    vars.reserve(d);
    static const char* defaults[] = {"x", "y", "z", "w", "u", "v"};
    for (int i = 0; i < d; ++i)
      vars.push_back(i < 6 ? defaults[i] : "x" + std::to_string(i + 1));
  }
  Ring(std::vector<std::string> names) : dim((int)names.size()), vars(std::move(names)) {
    if (dim < 1) throw std::invalid_argument("ring dimension must be >= 1");
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j])
          throw std::invalid_argument("duplicate variable name: " + vars[i]);
  }

  bool operator==(const Ring& o) const { return dim == o.dim && vars == o.vars; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  /// Subring on the variables whose indices are in `keep` (order preserved).
  Ring subring(const std::vector<int>& keep) const {
    std::vector<std::string> names;
    names.reserve(keep.size());
    for (int i : keep) names.push_back(vars.at(i));
    return Ring(std::move(names));
  }
};

}  // namespace gradmult

#endif
