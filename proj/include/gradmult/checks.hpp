#ifndef GRADMULT_CHECKS_HPP
#define GRADMULT_CHECKS_HPP

#include "gradmult/limits.hpp"
#include "gradmult/report.hpp"

namespace gradmult {

/// Setup hypothesis for monomial quotients R/Q: the nilradical
/// N = rad(Q)/Q has dim R/(Q : rad Q), and the hypothesis asks
/// dim N < dim R/Q. Radical Q gives N = 0 and an automatic pass.
CheckReport nilradical_hypothesis(const MonomialIdeal& Q);

/// Additivity along 0 -> R/(Q:f) -> R/Q -> R/(Q+(f)) -> 0 (multiplication by
/// the monomial f): entrywise e_d(M) = e_d(M') + e_d(M'') for every type.
CheckReport additivity_check(const MonomialIdeal& Q, const Exponent& f,
                             const std::vector<GradedFamily>& fams, Strategy strategy,
                             const Settings& settings = {});

/// Associativity formula over the ambient quotient R/Q: the family table of
/// R/Q equals the sum over top-dimensional minimal primes P of
/// localized_length(Q, P) times the table of R/P with the families pushed
/// through kill_variables. The nilradical hypothesis is evaluated first and
/// recorded; a failing hypothesis downgrades the verdict to evidence-only.
CheckReport associativity_check(const MonomialIdeal& Q, const std::vector<GradedFamily>& fams,
                                Strategy strategy, const Settings& settings = {});

/// Minkowski inequalities (i)-(iv) for a pair of m-primary families.
/// (iv) compares d-th roots exactly where the data allows (perfect powers,
/// rational ratio of the two e's, the d <= 3 equality identities) and falls
/// back to outward-rounded rational brackets refined on demand.
CheckReport minkowski_check(const GradedFamily& F1, const GradedFamily& F2,
                            const MonomialIdeal& Q, Strategy strategy,
                            const Settings& settings = {});

}  // namespace gradmult

#endif
