#ifndef GRADMULT_LIMITS_HPP
#define GRADMULT_LIMITS_HPP

#include <optional>
#include <vector>

#include "gradmult/family.hpp"
#include "gradmult/multiplicity.hpp"
#include "gradmult/report.hpp"
#include "gradmult/settings.hpp"

namespace gradmult {

enum class Strategy { exact_noetherian, sequence };

/// A limit value: exact rational in period mode, last sample with
/// convergence diagnostics in sequence mode.
struct LimitEstimate {
  Rat value;
  Strategy mode = Strategy::sequence;
  std::optional<long> period;  // common Noetherian period (exact mode)
  std::vector<std::pair<long, Rat>> samples;
  std::vector<Rat> last_changes;  // relative change of the trailing samples
  bool monotone_nondecreasing = false;
  bool fallback_warning = false;  // exact requested but no period found
  std::optional<long> growth_c;   // linear-growth evidence for general pairs
  long horizon = 0;
};

/// lcm of per-family Noetherian periods found within q_max (horizon N);
/// nullopt when any family has none.
std::optional<long> common_period(const std::vector<GradedFamily>& fams, long q_max, long N);

/// G_I^M(m) = lim lambda(M / I_{m m} M) / m^d for M = R/Q. Exact mode
/// reduces to the fixed ideals at a common period q, scaled by 1/q^d.
LimitEstimate family_G_value(const MonomialIdeal& Q, const std::vector<GradedFamily>& fams,
                             const std::vector<long>& point, Strategy strategy,
                             const Settings& settings = {},
                             std::optional<int> extract_degree = std::nullopt);

/// Family mixed multiplicities e_d(M; I(1)..I(s)); sequence mode solves the
/// unisolvent-grid system on sequence G-values and keeps the uncertainty
/// flag.
MultiplicityTable family_mixed_multiplicities(const MonomialIdeal& Q,
                                              const std::vector<GradedFamily>& fams,
                                              Strategy strategy, const Settings& settings = {},
                                              std::optional<int> extract_degree = std::nullopt);

/// Volume = Multiplicity: e_d(M; I(1)_p,..)/p^d against the family value
/// along p_list; exact equality demanded at period multiples in exact mode.
CheckReport volume_equals_multiplicity(const MonomialIdeal& Q,
                                       const std::vector<GradedFamily>& fams,
                                       const TypeVec& type, const std::vector<long>& p_list,
                                       Strategy strategy, const Settings& settings = {});

/// G_{(I;J)}(n0, n) = lim lambda(J_{mn} / I_{mn0} J_{mn}) / m^d. Records
/// linear-growth evidence for the derived pair ({J_mn}, {I_{mn0} J_mn}).
LimitEstimate general_family_G_value(const GradedFamily& I,
                                     const std::vector<GradedFamily>& Js, long n0,
                                     const std::vector<long>& nvec, Strategy strategy,
                                     const Settings& settings = {});

/// Family mixed multiplicities e_{(d0,d)}(I | J(1)..J(r)).
MultiplicityTable general_family_mixed_multiplicities(const GradedFamily& I,
                                                      const std::vector<GradedFamily>& Js,
                                                      Strategy strategy,
                                                      const Settings& settings = {});

/// Both clauses of the comparison corollary for all-m-primary families:
/// d0 = 0: e_{(0,d)}(R; I, J..) = e_d(R; J..); d0 > 0: e_{(d0,d)}(R; I, J..)
/// = e_{(d0-1,d)}(I | J..).
CheckReport comparison_check(const GradedFamily& I, const std::vector<GradedFamily>& Js,
                             Strategy strategy, const Settings& settings = {});

/// Double-limit evidence: exact inner limits at period multiples p must equal
/// the single-limit value; the fully truncated (p, m) sample is compared
/// within tolerance.
CheckReport double_limit_check(const GradedFamily& I, const std::vector<GradedFamily>& Js,
                               long n0, const std::vector<long>& nvec,
                               const Settings& settings = {});

}  // namespace gradmult

#endif
