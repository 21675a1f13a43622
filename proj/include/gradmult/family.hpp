#ifndef GRADMULT_FAMILY_HPP
#define GRADMULT_FAMILY_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradmult/ideal.hpp"
#include "gradmult/report.hpp"

namespace gradmult {

/// Lazily evaluated, memoized graded family of monomial ideals
/// (term(0) = R, term(n) term(m) inside term(n+m)). Values are immutable and
/// shareable; term() is safe for concurrent callers.
class GradedFamily {
 public:
  /// {I^n}.
  static GradedFamily powers(MonomialIdeal I);
  /// Noetherian truncation generated by the first `a` terms of `base`:
  /// beyond a, term(n) = sum_{i=1}^{n-1} term(i) term(n-i).
  static GradedFamily truncated(long a, GradedFamily base);
  /// {saturate(base_n)}.
  static GradedFamily saturation(GradedFamily base);
  /// Symbolic powers of a squarefree ideal: term(n) = intersection of P^n
  /// over the minimal primes P.
  static GradedFamily symbolic_powers(MonomialIdeal Q);
  /// {integral closure of I^n} (Newton polyhedron lattice points).
  static GradedFamily integral_closure_powers(MonomialIdeal I);
  /// {F_n G_n}.
  static GradedFamily product_family(GradedFamily F, GradedFamily G);
  /// {I^{ceil(n/alpha)}}.
  static GradedFamily scaled(MonomialIdeal I, long alpha);
  /// Explicit prefix (terms 1..k); beyond the prefix the Noetherian
  /// extension by products of earlier terms.
  static GradedFamily table(Ring ring, std::vector<MonomialIdeal> prefix);
  /// Internal derived family: term(n) = prod_k F_k.term(n * stride_k).
  static GradedFamily composite(std::vector<std::pair<GradedFamily, long>> factors);
  /// Internal derived family: term-wise image in R/(x_i : i in S).
  static GradedFamily killed(GradedFamily base, VarSet S);

  const Ring& ring() const;
  MonomialIdeal term(long n) const;
  std::string describe() const;

 private:
  struct Impl;
  explicit GradedFamily(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

/// Containment product(term(n), term(m)) inside term(n+m) for all n+m <= N.
CheckReport verify_graded(const GradedFamily& F, long N);
/// Descending chain term(n+1) inside term(n) for all n < N.
CheckReport verify_filtration(const GradedFamily& F, long N);

struct LinearGrowthWitness {
  long c = 0;
  long horizon = 0;
};

/// Smallest c <= c_max with term-wise J_n cap m^{cn} = I_n cap m^{cn} for all
/// n <= N. Validates the containment I_n inside J_n first (throws on
/// violation). A witness is horizon evidence, not a proof.
std::optional<LinearGrowthWitness> linear_growth_search(const GradedFamily& J,
                                                        const GradedFamily& I, long c_max,
                                                        long N);

/// Smallest q <= q_max with power(term(q), n) = term(nq) whenever nq <= N.
std::optional<long> noetherian_period(const GradedFamily& F, long q_max, long N);

/// is_m_primary at terms 1..N.
bool family_m_primary(const GradedFamily& F, long N);

}  // namespace gradmult

#endif
