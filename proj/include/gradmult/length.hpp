#ifndef GRADMULT_LENGTH_HPP
#define GRADMULT_LENGTH_HPP

#include <optional>

#include "gradmult/ideal.hpp"
#include "gradmult/rational.hpp"

namespace gradmult {

/// Lengths are lattice-point counts (lambda(k) = 1).
using Length = Int;

/// Points of the half-open box [0, box) outside I.
Length count_free_box(const MonomialIdeal& I, const Exponent& box);

/// lambda(R/I). Throws std::domain_error("infinite colength") unless I is
/// m-primary. Box bound: a_i >= b_i puts a inside I via the pure power
/// x_i^{b_i}, so only the box prod [0, b_i) needs scanning.
Length colength(const MonomialIdeal& I);

/// lambda((R/Q) / I(R/Q)) = colength(Q + I); requires Q + I m-primary.
Length module_colength(const MonomialIdeal& Q, const MonomialIdeal& I);

/// Smallest certificate this module derives automatically: c = sum_i b_i of
/// the minimal pure powers of I, which forces m^c inside I.
long default_certificate(const MonomialIdeal& I);

/// True iff m^c is contained in I (every exponent of total degree c lies in
/// I; higher degrees then follow by domination).
bool validate_certificate(const MonomialIdeal& I, long c);

/// lambda(J / I*J) for m-primary I. Any a in J \ I*J writes as g + e with g
/// a generator of J and |e| < c (else x^e lies in m^c, inside I, putting a
/// in I*J), so the box max_gens(J) + c covers everything. A caller-supplied
/// certificate is validated; by default c = default_certificate(I).
Length relative_length(const MonomialIdeal& J, const MonomialIdeal& I,
                       std::optional<long> certificate = std::nullopt);

/// lambda_{R_P}((R/Q)_P) for P a minimal prime of Q.
Length localized_length(const MonomialIdeal& Q, const VarSet& P);

}  // namespace gradmult

#endif
