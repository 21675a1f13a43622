#include "gradmult/multiplicity.hpp"

#include <numeric>
#include <stdexcept>

namespace gradmult {

Rat MultiplicityTable::at(const TypeVec& t) const {
  auto it = e.find(t);
  if (it == e.end()) throw std::invalid_argument("type vector not in table");
  return it->second;
}

std::vector<TypeVec> type_vectors(int arity, int total) {
  std::vector<TypeVec> out;
  TypeVec cur(arity, 0);
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == arity - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      rec(pos + 1, rest - v);
    }
  };
  if (arity >= 1) rec(0, total);
  return out;
}

Rat evaluate_G(const MultiplicityTable& table, const std::vector<Rat>& point) {
  if ((int)point.size() != table.arity)
    throw std::invalid_argument("evaluate_G: point arity mismatch");
  Rat total = 0;
  for (const auto& [t, ev] : table.e) {
    if (ev == 0) continue;
    Int denom = 1;
    Rat mono = 1;
    for (int i = 0; i < table.arity; ++i) {
      int exp = t[i];
      if (table.general && i == 0) exp += 1;  // t_0^{d_0+1} shift
      denom *= factorial(exp);
      for (int k = 0; k < exp; ++k) mono *= point[i];
    }
    total += ev * mono / Rat(denom);
  }
  return total;
}

PowerCache::PowerCache(MonomialIdeal base) : base_(std::move(base)) {
  pows_.push_back(MonomialIdeal::unit(base_.ring()));
}

const MonomialIdeal& PowerCache::at(long n) {
  while ((long)pows_.size() <= n) pows_.push_back(product(pows_.back(), base_));
  return pows_[n];
}

namespace {

Int table_normalizer(const MultiplicityTable& table, const TypeVec& t) {
  Int f = 1;
  for (int v : t) f *= factorial(v);
  return f;
}

void validate_entries(MultiplicityTable& table, bool require_integers) {
  for (const auto& [t, ev] : table.e) {
    if (ev < 0)
      throw std::logic_error("negative mixed multiplicity extracted (bug)");
    if (require_integers && denominator(ev) != 1)
      throw std::logic_error("non-integer mixed multiplicity for fixed ideals (bug)");
  }
}

}  // namespace

PolynomialFit multiplicity_fit(const MonomialIdeal& Q,
                               const std::vector<MonomialIdeal>& ideals,
                               const Settings& settings) {
  if (ideals.empty()) throw std::invalid_argument("need at least one ideal");
  const Ring& R = ideals[0].ring();
  for (const auto& I : ideals)
    if (!is_m_primary(sum(Q, I)))
      throw std::domain_error("ideal not m-primary modulo Q: " + ideal_string(I));

  const int s = (int)ideals.size();
  int D = std::max(0, dim_quotient(Q));
  std::vector<PowerCache> pows;
  pows.reserve(s);
  for (const auto& I : ideals) pows.emplace_back(I);

  GridFn f = [&](const std::vector<long>& m) -> Int {
    MonomialIdeal prod = MonomialIdeal::unit(R);
    for (int j = 0; j < s; ++j) prod = product(prod, pows[j].at(m[j]));
    return module_colength(Q, prod);
  };

  std::vector<long> start(s, (long)R.dim + 1);
  FitOptions opt;
  opt.cap = settings.fit_cap;
  return fit_numerical_function(f, s, D, std::move(start), opt);
}

MultiplicityTable mixed_multiplicities(const MonomialIdeal& Q,
                                       const std::vector<MonomialIdeal>& ideals,
                                       const Settings& settings,
                                       std::optional<int> extract_degree) {
  const Ring& R = ideals.at(0).ring();
  PolynomialFit fit = multiplicity_fit(Q, ideals, settings);
  const int ed = extract_degree.value_or(R.dim);

  MultiplicityTable table;
  table.arity = (int)ideals.size();
  table.degree = ed;
  Poly top = fit.poly.homogeneous_part(ed);
  for (const auto& t : type_vectors(table.arity, ed)) {
    Expo e(t.begin(), t.end());
    table.e[t] = top.coeff(e) * Rat(table_normalizer(table, t));
  }
  validate_entries(table, true);
  return table;
}

MultiplicityTable general_mixed_multiplicities(const MonomialIdeal& I,
                                               const std::vector<MonomialIdeal>& Js,
                                               const Settings& settings) {
  const Ring& R = I.ring();
  if (!is_m_primary(I))
    throw std::domain_error("general_mixed_multiplicities: I not m-primary");
  for (const auto& J : Js)
    if (J.is_zero())
      throw std::invalid_argument("general_mixed_multiplicities: zero ideal among J's");

  const int r = (int)Js.size();
  const int d = R.dim;
  const long c = default_certificate(I);

  PowerCache Ipows(I);
  std::vector<PowerCache> Jpows;
  Jpows.reserve(r);
  for (const auto& J : Js) Jpows.emplace_back(J);

  GridFn f = [&](const std::vector<long>& n) -> Int {
    MonomialIdeal K = Ipows.at(n[0]);
    for (int j = 0; j < r; ++j) K = product(K, Jpows[j].at(n[j + 1]));
    return relative_length(K, I, c);
  };

  std::vector<long> start(r + 1, (long)d + 1);
  FitOptions opt;
  opt.cap = settings.fit_cap;
  PolynomialFit fit = fit_numerical_function(f, r + 1, d - 1, std::move(start), opt);

  MultiplicityTable table;
  table.arity = r + 1;
  table.degree = d - 1;
  table.general = true;
  Poly top = fit.poly.homogeneous_part(d - 1);
  for (const auto& t : type_vectors(table.arity, d - 1)) {
    Expo e(t.begin(), t.end());
    table.e[t] = top.coeff(e) * Rat(table_normalizer(table, t));
  }
  validate_entries(table, true);

  // Every basis monomial of the Eq-(1.2)-shaped G carries t_0, so G(0,.) = 0
  // structurally; a nonzero value here means a broken extraction.
  std::vector<Rat> zero_point(r + 1, Rat(1));
  zero_point[0] = 0;
  if (evaluate_G(table, zero_point) != 0)
    throw std::logic_error("general table violates G(0, n) = 0 (bug)");
  return table;
}

}  // namespace gradmult
