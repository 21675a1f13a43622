#ifndef GRADMULT_IDEAL_HPP
#define GRADMULT_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "gradmult/ring.hpp"

namespace gradmult {

/// Sorted set of variable indices, identifying a monomial prime ideal.
using VarSet = std::vector<int>;

/// Monomial ideal given by its unique minimal generating set, kept as a
/// lexicographically sorted antichain of exponent vectors.
///
/// Encodings: no generators = zero ideal; the single generator 0 = unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal(Ring ring, std::vector<Exponent> points);

  static MonomialIdeal zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(Ring ring);
  /// The maximal ideal (x_1,...,x_d).
  static MonomialIdeal maximal(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Exponent>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Exponent& a) const;
  /// Ideal containment: every generator of `other` lies in *this.
  bool contains_ideal(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& o) const {
    return ring_ == o.ring_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  Ring ring_;
  std::vector<Exponent> gens_;
};

/// Antichain of <=-minimal points; membership-preserving.
MonomialIdeal normalize(Ring ring, std::vector<Exponent> points);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, long n);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
/// (I : J); throws std::invalid_argument if J is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
/// (I : m^infinity), computed as the fixed point of I <- (I : m).
MonomialIdeal saturate(const MonomialIdeal& I);
MonomialIdeal radical(const MonomialIdeal& I);

/// True iff every variable has a pure-power generator. The unit ideal counts
/// as m-primary (colength 0).
bool is_m_primary(const MonomialIdeal& I);

/// Minimal primes of a proper nonzero monomial ideal, as variable subsets
/// (the inclusion-minimal transversals of the generator supports).
std::vector<VarSet> minimal_primes(const MonomialIdeal& I);

/// Image of I in R/(x_i : i in S): generators with a positive coordinate in S
/// drop; the rest keep their coordinates outside S. S must be proper.
MonomialIdeal kill_variables(const MonomialIdeal& I, const VarSet& S);

/// Image of I in the localization at the monomial prime P: coordinates
/// outside P are deleted (those variables become units) and the result is
/// re-normalized in the P-variables.
MonomialIdeal localize_at_prime(const MonomialIdeal& I, const VarSet& P);

/// For m-primary I, the exponent b_i of the minimal pure power x_i^{b_i}.
/// Throws std::invalid_argument when some variable has no pure power.
Exponent pure_power_bounds(const MonomialIdeal& I);

VarSet support(const Exponent& a);

/// Krull dimension of R/Q; zero ideal gives dim R, unit ideal gives -1.
int dim_quotient(const MonomialIdeal& Q);

std::string monomial_string(const Ring& ring, const Exponent& a);
std::string ideal_string(const MonomialIdeal& I);

}  // namespace gradmult

#endif
