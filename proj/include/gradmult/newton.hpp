#ifndef GRADMULT_NEWTON_HPP
#define GRADMULT_NEWTON_HPP

#include <vector>

#include "gradmult/ideal.hpp"
#include "gradmult/multiplicity.hpp"
#include "gradmult/rational.hpp"

namespace gradmult {

/// Supporting inequality normal . x >= offset with integer data and
/// componentwise non-negative normal (the recession cone is the orthant).
struct HalfSpace {
  std::vector<Int> normal;
  Int offset;

  bool operator==(const HalfSpace& o) const {
    return normal == o.normal && offset == o.offset;
  }
  bool operator<(const HalfSpace& o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
};

/// conv(generator exponents) + R^d_{>=0}, with its half-space description.
struct NewtonPolyhedron {
  Ring ring;
  std::vector<Exponent> generators;
  std::vector<HalfSpace> half_spaces;
};

/// Half-space description by exact facet enumeration over generator/ray
/// subsets (d <= 3).
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I);

/// a in n.NP(I), decided by exact rational feasibility of
/// {lambda >= 0, sum lambda = n, sum lambda_g g <= a} (phase-1 simplex with
/// Bland's rule). Works in any dimension.
bool np_membership(const MonomialIdeal& I, long n, const Exponent& a);

/// Membership via the half-space description; d <= 3. Cross-checks the
/// simplex route.
bool np_membership_hrep(const NewtonPolyhedron& np, long n, const Exponent& a);

/// Minimal lattice points of n.NP(I) as a monomial ideal (the integral
/// closure of I^n). Enumerates the box [0, n*maxcoord] with a monotone
/// threshold search along the last axis.
MonomialIdeal integral_closure_power(const MonomialIdeal& I, long n);

/// Exact volume of R^d_{>=0} \ NP(I) for m-primary I, d <= 3.
Rat covolume(const MonomialIdeal& I);

/// Geometry-side mixed multiplicities: fits the degree-d covolume polynomial
/// of m |-> covolume(prod I_j^{m_j}) on the canonical grid; d <= 3.
MultiplicityTable mixed_covolume_table(const std::vector<MonomialIdeal>& ideals);

/// Vertices of the closure of R^d_{>=0} \ NP(I) (unscaled). Dimension 2
/// returns the boundary polygon order (origin first, then decreasing x);
/// dimension 3 returns a point cloud. Unit ideal gives an empty list.
std::vector<std::vector<Rat>> staircase_body_vertices(const MonomialIdeal& I);

}  // namespace gradmult

#endif
