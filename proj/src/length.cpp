#include "gradmult/length.hpp"

#include <algorithm>
#include <stdexcept>

#include "gradmult/kernels.hpp"

namespace gradmult {

Length count_free_box(const MonomialIdeal& I, const Exponent& box) {
  if ((int)box.size() != I.ring().dim)
    throw std::invalid_argument("box dimension mismatch");
  if (I.is_unit()) return 0;
  kern::GenPack pack = kern::pack_generators(I.gens(), box);
  return Length(kern::count_free(pack, box));
}

Length colength(const MonomialIdeal& I) {
  if (!is_m_primary(I)) throw std::domain_error("infinite colength");
  Exponent box = pure_power_bounds(I);
  return count_free_box(I, box);
}

Length module_colength(const MonomialIdeal& Q, const MonomialIdeal& I) {
  MonomialIdeal total = sum(Q, I);
  if (!is_m_primary(total))
    throw std::domain_error("infinite colength: Q + I not m-primary");
  return colength(total);
}

long default_certificate(const MonomialIdeal& I) {
  Exponent b = pure_power_bounds(I);
  long c = 0;
  for (Coord bi : b) c += bi;
  return c;
}

namespace {

bool all_degree_c_inside(const MonomialIdeal& I, Exponent& e, int pos, long rest) {
  const int d = I.ring().dim;
  if (pos == d - 1) {
    e[pos] = (Coord)rest;
    bool in = I.contains(e);
    e[pos] = 0;
    return in;
  }
  for (long v = 0; v <= rest; ++v) {
    e[pos] = (Coord)v;
    if (!all_degree_c_inside(I, e, pos + 1, rest - v)) {
      e[pos] = 0;
      return false;
    }
  }
  e[pos] = 0;
  return true;
}

}  // namespace

bool validate_certificate(const MonomialIdeal& I, long c) {
  if (c < 0) return false;
  Exponent e(I.ring().dim, 0);
  return all_degree_c_inside(I, e, 0, c);
}

Length relative_length(const MonomialIdeal& J, const MonomialIdeal& I,
                       std::optional<long> certificate) {
  if (I.ring() != J.ring())
    throw std::invalid_argument("relative_length: ring mismatch");
  if (!is_m_primary(I))
    throw std::domain_error("relative_length: I not m-primary");
  if (J.is_zero()) return 0;
  long c;
  if (certificate) {
    c = *certificate;
    if (!validate_certificate(I, c))
      throw std::invalid_argument("certificate rejected: m^c not inside I");
  } else {
    c = default_certificate(I);
  }
  const int d = I.ring().dim;
  Exponent box(d, 0);
  for (int i = 0; i < d; ++i) {
    Coord m = 0;
    for (const auto& g : J.gens()) m = std::max(m, g[i]);
    box[i] = m + (Coord)c;
  }
  // Points of the box in J but not in I*J; I*J sits inside J, so the two
  // free counts difference is exactly that.
  MonomialIdeal IJ = product(I, J);
  return count_free_box(IJ, box) - count_free_box(J, box);
}

Length localized_length(const MonomialIdeal& Q, const VarSet& P) {
  auto primes = minimal_primes(Q);
  if (std::find(primes.begin(), primes.end(), P) == primes.end())
    throw std::invalid_argument("localized_length: P is not a minimal prime of Q");
  MonomialIdeal loc = localize_at_prime(Q, P);
  return colength(loc);
}

}  // namespace gradmult
