#include "gradmult/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gradmult {

namespace {

void check_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ring() != J.ring())
    throw std::invalid_argument("monomial ideals live in different rings");
}

std::vector<Exponent> antichain(int dim, std::vector<Exponent> pts) {
  for (const auto& p : pts) {
    if ((int)p.size() != dim)
      throw std::invalid_argument("exponent dimension mismatch");
    for (Coord c : p)
      if (c < 0) throw std::invalid_argument("negative exponent");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Sort by total degree so a point can only be dominated by earlier ones.
  std::stable_sort(pts.begin(), pts.end(), [](const Exponent& a, const Exponent& b) {
    return total_degree(a) < total_degree(b);
  });
  std::vector<Exponent> keep;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : keep)
      if (dominates(q, p)) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(p);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Exponent> points)
    : ring_(std::move(ring)), gens_(antichain(ring_.dim, std::move(points))) {}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
  Exponent origin(ring.dim, 0);
  return MonomialIdeal(std::move(ring), {origin});
}

MonomialIdeal MonomialIdeal::maximal(Ring ring) {
  std::vector<Exponent> gens;
  for (int i = 0; i < ring.dim; ++i) {
    Exponent e(ring.dim, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && total_degree(gens_[0]) == 0;
}

bool MonomialIdeal::contains(const Exponent& a) const {
  if ((int)a.size() != ring_.dim)
    throw std::invalid_argument("exponent dimension mismatch");
  for (const auto& g : gens_)
    if (dominates(g, a)) return true;
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  check_same_ring(*this, other);
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal normalize(Ring ring, std::vector<Exponent> points) {
  return MonomialIdeal(std::move(ring), std::move(points));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<Exponent> pts = I.gens();
  pts.insert(pts.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.ring(), std::move(pts));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<Exponent> pts;
  pts.reserve(I.gens().size() * J.gens().size());
  for (const auto& g : I.gens())
    for (const auto& h : J.gens()) pts.push_back(coord_sum(g, h));
  return MonomialIdeal(I.ring(), std::move(pts));
}

MonomialIdeal power(const MonomialIdeal& I, long n) {
  if (n < 0) throw std::invalid_argument("negative power");
  MonomialIdeal r = MonomialIdeal::unit(I.ring());
  // Iterated product keeps intermediate antichains small.
  for (long i = 0; i < n; ++i) r = product(r, I);
  return r;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<Exponent> pts;
  pts.reserve(I.gens().size() * J.gens().size());
  for (const auto& g : I.gens())
    for (const auto& h : J.gens()) pts.push_back(coord_max(g, h));
  return MonomialIdeal(I.ring(), std::move(pts));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  if (J.is_zero()) throw std::invalid_argument("colon by zero ideal");
  bool first = true;
  MonomialIdeal result = MonomialIdeal::zero(I.ring());
  for (const auto& g : J.gens()) {
    // (I : x^g): truncated subtraction of g from each generator.
    std::vector<Exponent> pts;
    pts.reserve(I.gens().size());
    for (const auto& h : I.gens()) {
      Exponent e(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) e[i] = std::max<Coord>(h[i] - g[i], 0);
      pts.push_back(std::move(e));
    }
    MonomialIdeal part(I.ring(), std::move(pts));
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

MonomialIdeal saturate(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) return I;
  MonomialIdeal m = MonomialIdeal::maximal(I.ring());
  MonomialIdeal cur = I;
  for (;;) {
    MonomialIdeal next = colon(cur, m);
    if (next == cur) return cur;
    cur = next;
  }
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Exponent> pts;
  pts.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    Exponent e(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) e[i] = g[i] > 0 ? 1 : 0;
    pts.push_back(std::move(e));
  }
  return MonomialIdeal(I.ring(), std::move(pts));
}

bool is_m_primary(const MonomialIdeal& I) {
  for (int i = 0; i < I.ring().dim; ++i) {
    bool found = false;
    for (const auto& g : I.gens()) {
      bool pure = true;
      for (std::size_t j = 0; j < g.size(); ++j)
        if ((int)j != i && g[j] > 0) {
          pure = false;
          break;
        }
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

VarSet support(const Exponent& a) {
  VarSet s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) s.push_back((int)i);
  return s;
}

namespace {

void transversals(const std::vector<VarSet>& supports, std::size_t idx, VarSet& chosen,
                  std::vector<VarSet>& out) {
  if (idx == supports.size()) {
    out.push_back(chosen);
    return;
  }
  const VarSet& sup = supports[idx];
  bool hit = false;
  for (int v : sup)
    if (std::binary_search(chosen.begin(), chosen.end(), v)) {
      hit = true;
      break;
    }
  if (hit) {
    transversals(supports, idx + 1, chosen, out);
    return;
  }
  for (int v : sup) {
    auto pos = std::lower_bound(chosen.begin(), chosen.end(), v);
    chosen.insert(pos, v);
    transversals(supports, idx + 1, chosen, out);
    chosen.erase(std::find(chosen.begin(), chosen.end(), v));
  }
}

}  // namespace

std::vector<VarSet> minimal_primes(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("minimal primes require a proper nonzero ideal");
  std::vector<VarSet> supports;
  for (const auto& g : I.gens()) supports.push_back(support(g));
  std::sort(supports.begin(), supports.end(),
            [](const VarSet& a, const VarSet& b) { return a.size() < b.size(); });
  // Supports containing another support are redundant constraints.
  std::vector<VarSet> reduced;
  for (const auto& s : supports) {
    bool redundant = false;
    for (const auto& t : reduced)
      if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        redundant = true;
        break;
      }
    if (!redundant) reduced.push_back(s);
  }
  std::vector<VarSet> all;
  VarSet chosen;
  transversals(reduced, 0, chosen, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<VarSet> minimal;
  for (const auto& s : all) {
    bool dominated = false;
    for (const auto& t : all)
      if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

MonomialIdeal kill_variables(const MonomialIdeal& I, const VarSet& S) {
  const Ring& R = I.ring();
  std::vector<int> keep;
  for (int i = 0; i < R.dim; ++i)
    if (!std::binary_search(S.begin(), S.end(), i)) keep.push_back(i);
  if (keep.empty()) throw std::invalid_argument("kill_variables: S must be proper");
  Ring sub = R.subring(keep);
  std::vector<Exponent> pts;
  for (const auto& g : I.gens()) {
    bool drops = false;
    for (int i : S)
      if (g[i] > 0) {
        drops = true;
        break;
      }
    if (drops) continue;
    Exponent e;
    e.reserve(keep.size());
    for (int i : keep) e.push_back(g[i]);
    pts.push_back(std::move(e));
  }
  return MonomialIdeal(std::move(sub), std::move(pts));
}

MonomialIdeal localize_at_prime(const MonomialIdeal& I, const VarSet& P) {
  if (P.empty()) throw std::invalid_argument("localize_at_prime: empty prime");
  Ring sub = I.ring().subring(P);
  std::vector<Exponent> pts;
  pts.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    Exponent e;
    e.reserve(P.size());
    for (int i : P) e.push_back(g[i]);
    pts.push_back(std::move(e));
  }
  return MonomialIdeal(std::move(sub), std::move(pts));
}

Exponent pure_power_bounds(const MonomialIdeal& I) {
  const int d = I.ring().dim;
  Exponent b(d, -1);
  for (const auto& g : I.gens()) {
    VarSet sup = support(g);
    if (sup.empty()) return Exponent(d, 0);  // unit ideal
    if (sup.size() == 1) {
      int i = sup[0];
      if (b[i] < 0 || g[i] < b[i]) b[i] = g[i];
    }
  }
  for (int i = 0; i < d; ++i)
    if (b[i] < 0)
      throw std::invalid_argument("no pure power of " + I.ring().vars[i] +
                                  " (ideal not m-primary)");
  return b;
}

int dim_quotient(const MonomialIdeal& Q) {
  if (Q.is_zero()) return Q.ring().dim;
  if (Q.is_unit()) return -1;
  std::size_t min_height = Q.ring().dim;
  for (const auto& P : minimal_primes(Q)) min_height = std::min(min_height, P.size());
  return Q.ring().dim - (int)min_height;
}

std::string monomial_string(const Ring& ring, const Exponent& a) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < ring.dim; ++i) {
    if (a[i] == 0) continue;
    if (any) os << "*";
    os << ring.vars[i];
    if (a[i] > 1) os << "^" << a[i];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

std::string ideal_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < I.gens().size(); ++k) {
    if (k) os << ", ";
    os << monomial_string(I.ring(), I.gens()[k]);
  }
  os << ")";
  return os.str();
}

}  // namespace gradmult
