#include "gradmult/checks.hpp"

#include <numeric>
#include <stdexcept>

#include "gradmult/length.hpp"

namespace gradmult {

CheckReport nilradical_hypothesis(const MonomialIdeal& Q) {
  if (Q.is_unit()) throw std::invalid_argument("nilradical hypothesis: unit ideal");
  CheckReport report;
  report.name = "nilradical-hypothesis";
  report.instance = "Q = " + ideal_string(Q);
  int dbar = dim_quotient(Q);
  int dimN;
  if (Q.is_zero()) {
    dimN = -1;  // domain, N = 0
    report.notes["nilradical"] = "zero (domain)";
  } else {
    MonomialIdeal rad = radical(Q);
    if (rad == Q) {
      dimN = -1;
      report.notes["nilradical"] = "zero (radical ideal)";
    } else {
      MonomialIdeal ann = colon(Q, rad);
      dimN = dim_quotient(ann);
      report.notes["annihilator"] = ideal_string(ann);
    }
  }
  report.add("dim N < dim R/Q", Rat(dimN), Rat(dbar), dimN < dbar);
  report.finish();
  return report;
}

CheckReport additivity_check(const MonomialIdeal& Q, const Exponent& f,
                             const std::vector<GradedFamily>& fams, Strategy strategy,
                             const Settings& settings) {
  const Ring& R = fams.at(0).ring();
  if ((int)f.size() != R.dim) throw std::invalid_argument("additivity: monomial arity");
  MonomialIdeal fI(R, {f});
  MonomialIdeal left = colon(Q, fI);     // M'  = R/(Q:f)
  MonomialIdeal right = sum(Q, fI);      // M'' = R/(Q+(f))

  MultiplicityTable tm = family_mixed_multiplicities(Q, fams, strategy, settings);
  MultiplicityTable tl = family_mixed_multiplicities(left, fams, strategy, settings);
  MultiplicityTable tr = family_mixed_multiplicities(right, fams, strategy, settings);

  CheckReport report;
  report.name = "additivity";
  report.instance =
      "Q = " + ideal_string(Q) + ", f = " + monomial_string(R, f);
  report.exact_mode = !tm.sequence_mode && !tl.sequence_mode && !tr.sequence_mode;

  for (const auto& [t, em] : tm.e) {
    Rat rhs = tl.at(t) + tr.at(t);
    std::string key = "type=(";
    for (std::size_t i = 0; i < t.size(); ++i) key += (i ? "," : "") + std::to_string(t[i]);
    key += ")";
    bool ok;
    if (report.exact_mode) {
      ok = em == rhs;
    } else {
      Rat diff = em - rhs;
      if (diff < 0) diff = -diff;
      Rat denom = rhs < 0 ? -rhs : rhs;
      if (denom < 1) denom = 1;
      ok = diff / denom <= settings.tolerance;
    }
    report.add(key, em, rhs, ok);
  }
  report.finish();
  return report;
}

CheckReport associativity_check(const MonomialIdeal& Q, const std::vector<GradedFamily>& fams,
                                Strategy strategy, const Settings& settings) {
  if (Q.is_zero() || Q.is_unit())
    throw std::invalid_argument("associativity: Q must be proper and nonzero");
  const Ring& R = fams.at(0).ring();
  const int dbar = dim_quotient(Q);

  CheckReport report;
  report.name = "associativity";
  {
    std::string inst = "Q = " + ideal_string(Q);
    for (const auto& f : fams) inst += ", " + f.describe();
    report.instance = inst;
  }

  CheckReport hyp = nilradical_hypothesis(Q);
  report.notes["nilradical_hypothesis"] = verdict_name(hyp.verdict);

  if (dbar <= 0) {
    report.notes["degenerate"] = "dim R/Q = 0, vacuous sum; skipped";
    report.add("degenerate", Rat(0), Rat(0), true);
    report.finish();
    return report;
  }

  MultiplicityTable lhs = family_mixed_multiplicities(Q, fams, strategy, settings, dbar);

  std::map<TypeVec, Rat> rhs;
  for (const auto& t : type_vectors((int)fams.size(), dbar)) rhs[t] = 0;
  bool rhs_exact = true;
  for (const auto& P : minimal_primes(Q)) {
    if (R.dim - (int)P.size() != dbar) continue;
    Rat lambda(localized_length(Q, P));
    std::vector<GradedFamily> pushed;
    pushed.reserve(fams.size());
    for (const auto& f : fams) pushed.push_back(GradedFamily::killed(f, P));
    MonomialIdeal zero = MonomialIdeal::zero(pushed[0].ring());
    MultiplicityTable tp = family_mixed_multiplicities(zero, pushed, strategy, settings);
    rhs_exact = rhs_exact && !tp.sequence_mode;
    for (auto& [t, v] : rhs) v += lambda * tp.at(t);
  }

  report.exact_mode = !lhs.sequence_mode && rhs_exact;
  for (const auto& [t, lv] : lhs.e) {
    std::string key = "type=(";
    for (std::size_t i = 0; i < t.size(); ++i) key += (i ? "," : "") + std::to_string(t[i]);
    key += ")";
    bool ok;
    if (report.exact_mode) {
      ok = lv == rhs[t];
    } else {
      Rat diff = lv - rhs[t];
      if (diff < 0) diff = -diff;
      Rat denom = rhs[t] < 0 ? -rhs[t] : rhs[t];
      if (denom < 1) denom = 1;
      ok = diff / denom <= settings.tolerance;
    }
    report.add(key, lv, rhs[t], ok);
  }
  report.finish();
  if (!hyp.passed() && report.verdict == Verdict::pass)
    report.verdict = Verdict::evidence_only;
  return report;
}

namespace {

struct RootComparison {
  bool holds = false;
  Rat rhs_pow_d;  // representative value of (a^(1/d)+b^(1/d))^d
  std::string how;
};

// Decides u^(1/d) <= a^(1/d) + b^(1/d) for non-negative rationals, exactly
// where the data allows and by outward-rounded brackets otherwise.
RootComparison root_subadditive(const Rat& u, const Rat& a, const Rat& b, int d) {
  if (u < 0 || a < 0 || b < 0) throw std::invalid_argument("negative multiplicity");
  if (d == 1) return {u <= a + b, a + b, "exact"};
  if (u == 0) return {true, a + b, "exact"};
  if (a == 0) return {u <= b, b, "exact"};
  if (b == 0) return {u <= a, a, "exact"};

  Rat ra, rb;
  if (exact_root(a, d, ra) && exact_root(b, d, rb)) {
    Rat rhs = rat_pow(ra + rb, d);
    return {u <= rhs, rhs, "exact"};
  }
  Rat rho;
  if (exact_root(a / b, d, rho)) {
    Rat rhs = rat_pow(1 + rho, d) * b;
    return {u <= rhs, rhs, "exact"};
  }

  if (d == 2) {
    // u <= a + b + 2 sqrt(ab), squared away.
    Rat v = u - a - b;
    if (v <= 0) return {true, u, "exact"};
    return {v * v <= 4 * a * b, a + b, "exact"};
  }
  if (d == 3) {
    // Equality iff (u-a-b)^3 = 27abu with u >= a + b: a^(1/3) + b^(1/3) is
    // the unique positive root of x^3 - 3(ab)^(1/3) x - (a+b).
    Rat v = u - a - b;
    if (v >= 0 && v * v * v == 27 * a * b * u) return {true, u, "exact-equality"};
  }

  Rat width(1, 1000000000);
  for (int round = 0; round < 200; ++round) {
    RootBracket bu = root_bracket(u, d, width);
    RootBracket ba = root_bracket(a, d, width);
    RootBracket bb = root_bracket(b, d, width);
    if (bu.hi <= ba.lo + bb.lo)
      return {true, rat_pow(ba.hi + bb.hi, d), "certified bracket"};
    if (bu.lo > ba.hi + bb.hi)
      return {false, rat_pow(ba.hi + bb.hi, d), "certified bracket"};
    width /= 1024;
  }
  throw std::logic_error("root bracket refinement did not separate (bug)");
}

}  // namespace

CheckReport minkowski_check(const GradedFamily& F1, const GradedFamily& F2,
                            const MonomialIdeal& Q, Strategy strategy,
                            const Settings& settings) {
  const Ring& R = F1.ring();
  const int d = R.dim;
  if (d < 1) throw std::invalid_argument("minkowski: positive dimension required");

  MultiplicityTable pair =
      family_mixed_multiplicities(Q, {F1, F2}, strategy, settings);
  Rat eA = family_mixed_multiplicities(Q, {F1}, strategy, settings).at({d});
  Rat eB = family_mixed_multiplicities(Q, {F2}, strategy, settings).at({d});
  Rat eAB = family_mixed_multiplicities(Q, {GradedFamily::product_family(F1, F2)}, strategy,
                                        settings)
                .at({d});

  CheckReport report;
  report.name = "minkowski";
  report.instance = F1.describe() + ", " + F2.describe() +
                    (Q.is_zero() ? "" : ", Q = " + ideal_string(Q));
  report.exact_mode = !pair.sequence_mode;

  auto e = [&](int i) { return pair.at({i, d - i}); };

  for (int i = 1; i <= d - 1; ++i)
    report.add("(i) i=" + std::to_string(i), e(i) * e(i), e(i + 1) * e(i - 1),
               e(i) * e(i) <= e(i + 1) * e(i - 1));
  for (int i = 0; i <= d; ++i)
    report.add("(ii) i=" + std::to_string(i), e(i) * e(d - i), eA * eB,
               e(i) * e(d - i) <= eA * eB);
  for (int i = 0; i <= d; ++i)
    report.add("(iii) i=" + std::to_string(i), rat_pow(e(i), d),
               rat_pow(eA, i) * rat_pow(eB, d - i),
               rat_pow(e(i), d) <= rat_pow(eA, i) * rat_pow(eB, d - i));
  {
    RootComparison cmp = root_subadditive(eAB, eA, eB, d);
    report.add("(iv)", eAB, cmp.rhs_pow_d, cmp.holds);
    report.notes["(iv)"] =
        cmp.how + "; e(FG)^(1/d) <= e(F)^(1/d) + e(G)^(1/d), rhs column is the d-th power";
  }
  report.finish();
  return report;
}

}  // namespace gradmult
