#include "gradmult/limits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gradmult/length.hpp"
#include "gradmult/linalg.hpp"

namespace gradmult {

namespace {

void require_same_ring(const std::vector<GradedFamily>& fams) {
  for (const auto& f : fams)
    if (f.ring() != fams[0].ring())
      throw std::invalid_argument("families live in different rings");
}

void require_graded(const std::vector<GradedFamily>& fams, const Settings& settings) {
  for (const auto& f : fams) {
    CheckReport r = verify_graded(f, settings.verify_horizon);
    if (!r.passed())
      throw std::domain_error("family fails the graded axiom at horizon: " + f.describe());
  }
}

Rat q_scale(long q, int degree) {
  Rat s = 1;
  for (int i = 0; i < degree; ++i) s *= q;
  return s;
}

void attach_diagnostics(LimitEstimate& est) {
  const auto& s = est.samples;
  est.monotone_nondecreasing = true;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i].second < s[i - 1].second) est.monotone_nondecreasing = false;
  std::size_t k = std::min<std::size_t>(3, s.size() >= 2 ? s.size() - 1 : 0);
  for (std::size_t i = s.size() - k; i < s.size(); ++i) {
    Rat prev = s[i - 1].second, cur = s[i].second;
    Rat diff = cur - prev;
    if (diff < 0) diff = -diff;
    Rat denom = cur < 0 ? -cur : cur;
    if (denom < 1) denom = 1;
    est.last_changes.push_back(diff / denom);
  }
}

// Sample points (k_1..k_{s-1}, 1) with |k| <= degree: unisolvent for
// homogeneous polynomials of the given degree in s variables.
std::vector<std::vector<long>> homogeneous_grid(int s, int degree) {
  std::vector<std::vector<long>> grid;
  for (int total = 0; total <= degree; ++total)
    for (const auto& t : type_vectors(std::max(s - 1, 1), total)) {
      std::vector<long> m(t.begin(), t.end());
      if (s == 1) m.clear();
      m.push_back(1);
      if ((int)m.size() == s) grid.push_back(std::move(m));
    }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

LimitEstimate sequence_G(const MonomialIdeal& Q, const std::vector<GradedFamily>& fams,
                         const std::vector<long>& point, int degree, long horizon) {
  LimitEstimate est;
  est.mode = Strategy::sequence;
  est.horizon = horizon;
  const Ring& R = fams[0].ring();
  for (long m = 1; m <= horizon; ++m) {
    MonomialIdeal prod = MonomialIdeal::unit(R);
    for (std::size_t i = 0; i < fams.size(); ++i)
      prod = product(prod, fams[i].term(m * point[i]));
    Rat v = Rat(module_colength(Q, prod)) / q_scale(m, degree);
    est.samples.emplace_back(m, v);
  }
  est.value = est.samples.back().second;
  attach_diagnostics(est);
  return est;
}

}  // namespace

std::optional<long> common_period(const std::vector<GradedFamily>& fams, long q_max, long N) {
  long q = 1;
  for (const auto& f : fams) {
    auto qi = noetherian_period(f, q_max, N);
    if (!qi) return std::nullopt;
    q = std::lcm(q, *qi);
  }
  return q;
}

LimitEstimate family_G_value(const MonomialIdeal& Q, const std::vector<GradedFamily>& fams,
                             const std::vector<long>& point, Strategy strategy,
                             const Settings& settings, std::optional<int> extract_degree) {
  if (fams.empty()) throw std::invalid_argument("family_G_value: no families");
  if (point.size() != fams.size())
    throw std::invalid_argument("family_G_value: point arity mismatch");
  require_same_ring(fams);
  require_graded(fams, settings);
  const Ring& R = fams[0].ring();
  const int ed = extract_degree.value_or(R.dim);
  const long H = settings.horizon_for(R.dim);

  LimitEstimate est;
  if (strategy == Strategy::exact_noetherian) {
    auto q = common_period(fams, settings.q_max, H);
    if (q) {
      std::vector<MonomialIdeal> terms;
      terms.reserve(fams.size());
      for (const auto& f : fams) terms.push_back(f.term(*q));
      MultiplicityTable table = mixed_multiplicities(Q, terms, settings, ed);
      std::vector<Rat> pt;
      pt.reserve(point.size());
      for (long v : point) pt.push_back(Rat(v));
      est.mode = Strategy::exact_noetherian;
      est.period = q;
      est.value = evaluate_G(table, pt) / q_scale(*q, ed);
      return est;
    }
    est.fallback_warning = true;
  }
  LimitEstimate seq = sequence_G(Q, fams, point, ed, H);
  seq.fallback_warning = est.fallback_warning;
  return seq;
}

MultiplicityTable family_mixed_multiplicities(const MonomialIdeal& Q,
                                              const std::vector<GradedFamily>& fams,
                                              Strategy strategy, const Settings& settings,
                                              std::optional<int> extract_degree) {
  if (fams.empty()) throw std::invalid_argument("family_mixed_multiplicities: no families");
  require_same_ring(fams);
  require_graded(fams, settings);
  const Ring& R = fams[0].ring();
  const int ed = extract_degree.value_or(R.dim);
  const int s = (int)fams.size();
  const long H = settings.horizon_for(R.dim);

  if (strategy == Strategy::exact_noetherian) {
    auto q = common_period(fams, settings.q_max, H);
    if (q) {
      std::vector<MonomialIdeal> terms;
      terms.reserve(s);
      for (const auto& f : fams) terms.push_back(f.term(*q));
      MultiplicityTable table = mixed_multiplicities(Q, terms, settings, ed);
      Rat scale = q_scale(*q, ed);
      for (auto& [t, e] : table.e) e /= scale;
      return table;
    }
  }

  // Sequence mode: solve the unisolvent-grid system on sequence G-values.
  auto grid = homogeneous_grid(s, ed);
  auto types = type_vectors(s, ed);
  if (grid.size() != types.size()) throw std::logic_error("family grid size mismatch (bug)");
  std::vector<std::vector<Rat>> A(grid.size(), std::vector<Rat>(types.size()));
  std::vector<Rat> rhs(grid.size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    rhs[r] = sequence_G(Q, fams, grid[r], ed, H).value;
    for (std::size_t c = 0; c < types.size(); ++c) {
      Rat v = 1;
      for (int j = 0; j < s; ++j)
        for (int rep = 0; rep < types[c][j]; ++rep) v *= grid[r][j];
      A[r][c] = v;
    }
  }
  std::vector<Rat> coeffs = solve_linear_system(A, rhs);
  MultiplicityTable table;
  table.arity = s;
  table.degree = ed;
  table.sequence_mode = true;
  for (std::size_t c = 0; c < types.size(); ++c) {
    Int norm = 1;
    for (int v : types[c]) norm *= factorial(v);
    table.e[types[c]] = coeffs[c] * Rat(norm);
  }
  return table;
}

CheckReport volume_equals_multiplicity(const MonomialIdeal& Q,
                                       const std::vector<GradedFamily>& fams,
                                       const TypeVec& type, const std::vector<long>& p_list,
                                       Strategy strategy, const Settings& settings) {
  if ((int)type.size() != (int)fams.size())
    throw std::invalid_argument("vol-mult: type arity mismatch");
  const Ring& R = fams.at(0).ring();
  const int ed = R.dim;
  if (std::accumulate(type.begin(), type.end(), 0) != ed)
    throw std::invalid_argument("vol-mult: type must sum to the ring dimension");
  if (p_list.empty()) throw std::invalid_argument("vol-mult: empty p list");

  MultiplicityTable fam_table = family_mixed_multiplicities(Q, fams, strategy, settings);
  Rat e_family = fam_table.at(type);
  std::optional<long> q;
  if (!fam_table.sequence_mode)
    q = common_period(fams, settings.q_max, settings.horizon_for(R.dim));

  CheckReport report;
  report.name = "volume=multiplicity";
  {
    std::string inst;
    for (const auto& f : fams) inst += (inst.empty() ? "" : ", ") + f.describe();
    report.instance = inst;
  }
  report.exact_mode = !fam_table.sequence_mode;

  for (std::size_t i = 0; i < p_list.size(); ++i) {
    long p = p_list[i];
    std::vector<MonomialIdeal> terms;
    terms.reserve(fams.size());
    for (const auto& f : fams) terms.push_back(f.term(p));
    MultiplicityTable fixed = mixed_multiplicities(Q, terms, settings, ed);
    Rat ratio = fixed.at(type) / q_scale(p, ed);
    bool final = i + 1 == p_list.size();
    bool ok = true;
    if (final) {
      if (q && p % *q == 0) {
        ok = ratio == e_family;
      } else {
        Rat diff = ratio - e_family;
        if (diff < 0) diff = -diff;
        Rat denom = e_family < 0 ? -e_family : e_family;
        if (denom < 1) denom = 1;
        ok = diff / denom <= settings.tolerance;
        report.exact_mode = false;
      }
    }
    report.add("p=" + std::to_string(p), ratio, e_family, ok);
  }
  report.notes["type"] = [&] {
    std::string s;
    for (int v : type) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
  }();
  report.finish();
  return report;
}

namespace {

LimitEstimate general_sequence_G(const GradedFamily& I, const std::vector<GradedFamily>& Js,
                                 long n0, const std::vector<long>& nvec, int d, long horizon) {
  LimitEstimate est;
  est.mode = Strategy::sequence;
  est.horizon = horizon;
  const Ring& R = I.ring();
  for (long m = 1; m <= horizon; ++m) {
    MonomialIdeal A = MonomialIdeal::unit(R);
    for (std::size_t j = 0; j < Js.size(); ++j) A = product(A, Js[j].term(m * nvec[j]));
    Rat v = Rat(relative_length(A, I.term(m * n0))) / q_scale(m, d);
    est.samples.emplace_back(m, v);
  }
  est.value = est.samples.back().second;
  attach_diagnostics(est);
  return est;
}

std::optional<long> derived_pair_growth(const GradedFamily& I,
                                        const std::vector<GradedFamily>& Js, long n0,
                                        const std::vector<long>& nvec,
                                        const Settings& settings) {
  std::vector<std::pair<GradedFamily, long>> jf, hf;
  hf.emplace_back(I, n0);
  for (std::size_t j = 0; j < Js.size(); ++j) {
    jf.emplace_back(Js[j], nvec[j]);
    hf.emplace_back(Js[j], nvec[j]);
  }
  if (jf.empty()) jf.emplace_back(I, 0);  // r = 0: the constant family {R}
  GradedFamily Jpair = GradedFamily::composite(std::move(jf));
  GradedFamily Hpair = GradedFamily::composite(std::move(hf));
  auto w = linear_growth_search(Jpair, Hpair, settings.c_max, settings.verify_horizon);
  if (w) return w->c;
  return std::nullopt;
}

}  // namespace

LimitEstimate general_family_G_value(const GradedFamily& I,
                                     const std::vector<GradedFamily>& Js, long n0,
                                     const std::vector<long>& nvec, Strategy strategy,
                                     const Settings& settings) {
  if (nvec.size() != Js.size())
    throw std::invalid_argument("general_family_G_value: point arity mismatch");
  std::vector<GradedFamily> all{I};
  all.insert(all.end(), Js.begin(), Js.end());
  require_same_ring(all);
  require_graded(all, settings);
  const Ring& R = I.ring();
  const int d = R.dim;
  const long H = settings.horizon_for(d);
  if (!family_m_primary(I, 2))
    throw std::domain_error("general_family_G_value: primary family not m-primary");

  std::optional<long> growth = derived_pair_growth(I, Js, n0, nvec, settings);

  LimitEstimate est;
  if (strategy == Strategy::exact_noetherian) {
    auto q = common_period(all, settings.q_max, H);
    if (q) {
      std::vector<MonomialIdeal> Jterms;
      Jterms.reserve(Js.size());
      for (const auto& J : Js) Jterms.push_back(J.term(*q));
      MultiplicityTable table = general_mixed_multiplicities(I.term(*q), Jterms, settings);
      std::vector<Rat> pt;
      pt.push_back(Rat(n0));
      for (long v : nvec) pt.push_back(Rat(v));
      est.mode = Strategy::exact_noetherian;
      est.period = q;
      est.growth_c = growth;
      est.value = evaluate_G(table, pt) / q_scale(*q, d);
      if (n0 == 0 && est.value != 0)
        throw std::logic_error("structural check failed: G(0, n) != 0");
      return est;
    }
    est.fallback_warning = true;
  }
  LimitEstimate seq = general_sequence_G(I, Js, n0, nvec, d, H);
  seq.fallback_warning = est.fallback_warning;
  seq.growth_c = growth;
  if (n0 == 0 && seq.value != 0)
    throw std::logic_error("structural check failed: G(0, n) != 0");
  return seq;
}

MultiplicityTable general_family_mixed_multiplicities(const GradedFamily& I,
                                                      const std::vector<GradedFamily>& Js,
                                                      Strategy strategy,
                                                      const Settings& settings) {
  std::vector<GradedFamily> all{I};
  all.insert(all.end(), Js.begin(), Js.end());
  require_same_ring(all);
  require_graded(all, settings);
  const Ring& R = I.ring();
  const int d = R.dim;
  const int r = (int)Js.size();
  const long H = settings.horizon_for(d);

  if (strategy == Strategy::exact_noetherian) {
    auto q = common_period(all, settings.q_max, H);
    if (q) {
      std::vector<MonomialIdeal> Jterms;
      Jterms.reserve(r);
      for (const auto& J : Js) Jterms.push_back(J.term(*q));
      MultiplicityTable table = general_mixed_multiplicities(I.term(*q), Jterms, settings);
      Rat scale = q_scale(*q, d);
      for (auto& [t, e] : table.e) e /= scale;
      return table;
    }
  }

  // Sequence mode: sample at (1, k), |k| <= d-1; for each d the slot d0 is
  // forced to d-1-|d|, so the dehomogenized system is square.
  auto ktypes = type_vectors(std::max(r, 1), 0);
  ktypes.clear();
  for (int total = 0; total <= d - 1; ++total)
    for (auto& t : type_vectors(std::max(r, 1), total)) {
      TypeVec kt(t.begin(), t.end());
      if (r == 0) kt.clear();
      ktypes.push_back(kt);
    }
  std::sort(ktypes.begin(), ktypes.end());
  ktypes.erase(std::unique(ktypes.begin(), ktypes.end()), ktypes.end());

  std::vector<std::vector<Rat>> A(ktypes.size(), std::vector<Rat>(ktypes.size()));
  std::vector<Rat> rhs(ktypes.size());
  for (std::size_t row = 0; row < ktypes.size(); ++row) {
    std::vector<long> nvec(ktypes[row].begin(), ktypes[row].end());
    rhs[row] = general_sequence_G(I, Js, 1, nvec, d, H).value;
    for (std::size_t col = 0; col < ktypes.size(); ++col) {
      const TypeVec& dv = ktypes[col];
      int d0 = d - 1 - std::accumulate(dv.begin(), dv.end(), 0);
      Int denom = factorial(d0 + 1);
      for (int v : dv) denom *= factorial(v);
      Rat basis = Rat(1, denom);  // t0 = 1
      for (int j = 0; j < r; ++j)
        for (int rep = 0; rep < dv[j]; ++rep) basis *= ktypes[row][j];
      A[row][col] = basis;
    }
  }
  std::vector<Rat> coeffs = solve_linear_system(A, rhs);

  MultiplicityTable table;
  table.arity = r + 1;
  table.degree = d - 1;
  table.general = true;
  table.sequence_mode = true;
  for (std::size_t col = 0; col < ktypes.size(); ++col) {
    const TypeVec& dv = ktypes[col];
    int d0 = d - 1 - std::accumulate(dv.begin(), dv.end(), 0);
    TypeVec full;
    full.push_back(d0);
    full.insert(full.end(), dv.begin(), dv.end());
    table.e[full] = coeffs[col];
  }
  std::vector<Rat> zero_point(r + 1, Rat(1));
  zero_point[0] = 0;
  if (evaluate_G(table, zero_point) != 0)
    throw std::logic_error("general family table violates G(0, n) = 0 (bug)");
  return table;
}

CheckReport comparison_check(const GradedFamily& I, const std::vector<GradedFamily>& Js,
                             Strategy strategy, const Settings& settings) {
  const Ring& R = I.ring();
  const int d = R.dim;
  const int r = (int)Js.size();
  for (const auto& J : Js)
    if (!family_m_primary(J, 2))
      throw std::domain_error("comparison_check requires all-m-primary families");

  std::vector<GradedFamily> all{I};
  all.insert(all.end(), Js.begin(), Js.end());
  MonomialIdeal zero = MonomialIdeal::zero(R);
  MultiplicityTable lhs_table = family_mixed_multiplicities(zero, all, strategy, settings);
  std::optional<MultiplicityTable> j_table;
  if (r >= 1)
    j_table = family_mixed_multiplicities(zero, Js, strategy, settings);
  MultiplicityTable g_table = general_family_mixed_multiplicities(I, Js, strategy, settings);

  CheckReport report;
  report.name = "comparison-corollary";
  {
    std::string inst = I.describe();
    for (const auto& J : Js) inst += ", " + J.describe();
    report.instance = inst;
  }
  report.exact_mode = !lhs_table.sequence_mode && !g_table.sequence_mode &&
                      (!j_table || !j_table->sequence_mode);

  for (const auto& [t, lhs] : lhs_table.e) {
    int d0 = t[0];
    TypeVec dv(t.begin() + 1, t.end());
    Rat rhs;
    std::string label;
    if (d0 == 0) {
      if (!j_table) continue;  // r = 0 has no d0 = 0 type unless d = 0
      rhs = j_table->at(dv);
      label = "d0=0";
    } else {
      TypeVec shifted;
      shifted.push_back(d0 - 1);
      shifted.insert(shifted.end(), dv.begin(), dv.end());
      rhs = g_table.at(shifted);
      label = "d0>0";
    }
    std::string key = label + " type=(";
    for (std::size_t i = 0; i < t.size(); ++i) key += (i ? "," : "") + std::to_string(t[i]);
    key += ")";
    bool ok;
    if (report.exact_mode) {
      ok = lhs == rhs;
    } else {
      Rat diff = lhs - rhs;
      if (diff < 0) diff = -diff;
      Rat denom = rhs < 0 ? -rhs : rhs;
      if (denom < 1) denom = 1;
      ok = diff / denom <= settings.tolerance;
    }
    report.add(key, lhs, rhs, ok);
  }
  report.finish();
  return report;
}

CheckReport double_limit_check(const GradedFamily& I, const std::vector<GradedFamily>& Js,
                               long n0, const std::vector<long>& nvec,
                               const Settings& settings) {
  const Ring& R = I.ring();
  const int d = R.dim;
  LimitEstimate single =
      general_family_G_value(I, Js, n0, nvec, Strategy::exact_noetherian, settings);
  const bool exact = single.mode == Strategy::exact_noetherian;
  const long q = single.period.value_or(1);

  CheckReport report;
  report.name = "double-limit";
  {
    std::string inst = I.describe();
    for (const auto& J : Js) inst += ", " + J.describe();
    report.instance = inst;
  }
  report.exact_mode = exact;
  report.notes["single_value"] = to_string(single.value);
  if (single.growth_c)
    report.notes["pair_growth_c"] = std::to_string(*single.growth_c);

  std::vector<Rat> pt;
  pt.push_back(Rat(n0));
  for (long v : nvec) pt.push_back(Rat(v));

  // Inner limits reduced to period mode at multiples of q: exact equality.
  for (long mult : {1L, 2L, 4L}) {
    long p = mult * q;
    std::vector<MonomialIdeal> Jterms;
    for (const auto& J : Js) Jterms.push_back(J.term(p));
    MultiplicityTable fixed = general_mixed_multiplicities(I.term(p), Jterms, settings);
    Rat inner = evaluate_G(fixed, pt) / q_scale(p, d);
    bool ok = exact ? inner == single.value : true;
    report.add("inner-exact p=" + std::to_string(p), inner, single.value, ok);
  }

  // Fully truncated double-sequence sample at (p, m) = (8q, 8).
  {
    const long p = 8 * q, m = 8;
    MonomialIdeal A = MonomialIdeal::unit(R);
    for (std::size_t j = 0; j < Js.size(); ++j)
      A = product(A, power(Js[j].term(p), m * nvec[j]));
    MonomialIdeal B = power(I.term(p), m * n0);
    Rat sample = Rat(relative_length(A, B)) / (q_scale(p, d) * q_scale(m, d));
    Rat diff = sample - single.value;
    if (diff < 0) diff = -diff;
    Rat denom = single.value < 0 ? -single.value : single.value;
    if (denom < 1) denom = 1;
    bool ok = diff / denom <= settings.tolerance;
    report.add("sample p=" + std::to_string(p) + " m=" + std::to_string(m), sample,
               single.value, ok);
  }

  // Empirical c(J(p), H(p)) = c p scaling of the standing assumption.
  {
    std::string cs;
    for (long mult : {1L, 2L}) {
      long p = mult * q;
      std::vector<std::pair<GradedFamily, long>> jf, hf;
      hf.emplace_back(GradedFamily::powers(I.term(p)), n0);
      for (std::size_t j = 0; j < Js.size(); ++j) {
        jf.emplace_back(GradedFamily::powers(Js[j].term(p)), nvec[j]);
        hf.emplace_back(GradedFamily::powers(Js[j].term(p)), nvec[j]);
      }
      if (jf.empty()) jf.emplace_back(GradedFamily::powers(I.term(p)), 0);
      auto w = linear_growth_search(GradedFamily::composite(std::move(jf)),
                                    GradedFamily::composite(std::move(hf)),
                                    settings.c_max * p, settings.verify_horizon);
      cs += (cs.empty() ? "" : "; ") + ("p=" + std::to_string(p) + ":" +
                                        (w ? std::to_string(w->c) : "none"));
    }
    report.notes["pair_growth_c_at_p"] = cs;
  }

  if (!exact) report.notes["mode"] = "sequence fallback: no common period found";
  report.finish();
  return report;
}

}  // namespace gradmult
