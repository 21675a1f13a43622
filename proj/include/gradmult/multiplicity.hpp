#ifndef GRADMULT_MULTIPLICITY_HPP
#define GRADMULT_MULTIPLICITY_HPP

#include <map>
#include <optional>
#include <vector>

#include "gradmult/fit.hpp"
#include "gradmult/ideal.hpp"
#include "gradmult/length.hpp"
#include "gradmult/settings.hpp"

namespace gradmult {

/// Type vector of a mixed multiplicity; for general tables the first slot is
/// d_0 and the remaining r slots index the non-primary ideals.
using TypeVec = std::vector<int>;

struct MultiplicityTable {
  int arity = 0;   // s, or r+1 for general tables
  int degree = 0;  // |type| of every entry: d (classical) or d-1 (general)
  bool general = false;
  bool sequence_mode = false;  // entries inherited sequence-mode uncertainty
  std::map<TypeVec, Rat> e;

  Rat at(const TypeVec& t) const;
};

/// All type vectors of the given arity and total.
std::vector<TypeVec> type_vectors(int arity, int total);

/// G at a point: classical tables use e/(prod d_i!) t^d; general tables use
/// the t_0-shifted basis e/((d_0+1)! prod d_i!) t_0^{d_0+1} t^d.
Rat evaluate_G(const MultiplicityTable& table, const std::vector<Rat>& point);

/// Incrementally built powers of a fixed ideal (I^0 = R).
class PowerCache {
 public:
  explicit PowerCache(MonomialIdeal base);
  const MonomialIdeal& at(long n);

 private:
  MonomialIdeal base_;
  std::vector<MonomialIdeal> pows_;
};

/// The Hilbert-style fit of m |-> lambda((R/Q)/(prod I_j^{m_j})(R/Q)).
PolynomialFit multiplicity_fit(const MonomialIdeal& Q,
                               const std::vector<MonomialIdeal>& ideals,
                               const Settings& settings = {});

/// Mixed multiplicities e_d(M; I_1..I_s) for M = R/Q (Q may be the zero
/// ideal). Extraction happens at degree `extract_degree` (default: dim R);
/// the classical case has every entry a non-negative integer.
MultiplicityTable mixed_multiplicities(const MonomialIdeal& Q,
                                       const std::vector<MonomialIdeal>& ideals,
                                       const Settings& settings = {},
                                       std::optional<int> extract_degree = std::nullopt);

/// Mixed multiplicities e_{(d0,d)}(I | J_1..J_r) from the degree-(d-1) fit of
/// (n0, n) |-> lambda(I^{n0} J^n / I^{n0+1} J^n). Supports r = 0.
MultiplicityTable general_mixed_multiplicities(const MonomialIdeal& I,
                                               const std::vector<MonomialIdeal>& Js,
                                               const Settings& settings = {});

}  // namespace gradmult

#endif
