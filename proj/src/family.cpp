#include "gradmult/family.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "gradmult/newton.hpp"

namespace gradmult {

struct GradedFamily::Impl {
  enum class Kind {
    powers,
    truncated,
    saturation,
    symbolic,
    closure,
    product,
    scaled,
    table,
    composite,
    killed
  };

  Kind kind;
  Ring ring;
  std::optional<MonomialIdeal> base_ideal;
  long param = 0;  // a (truncated) or alpha (scaled)
  std::vector<GradedFamily> children;
  std::vector<long> strides;                // composite
  std::vector<MonomialIdeal> prefix;        // table
  std::vector<MonomialIdeal> prime_ideals;  // symbolic
  VarSet killed_vars;

  mutable std::mutex mutex;
  mutable std::map<long, MonomialIdeal> memo;

  MonomialIdeal compute(long n, const GradedFamily& self) const;
};

MonomialIdeal GradedFamily::Impl::compute(long n, const GradedFamily& self) const {
  if (n == 0) return MonomialIdeal::unit(ring);
  switch (kind) {
    case Kind::powers:
      return product(self.term(n - 1), *base_ideal);
    case Kind::truncated: {
      if (n <= param) return children[0].term(n);
      MonomialIdeal acc = MonomialIdeal::zero(ring);
      for (long i = 1; i < n; ++i) acc = sum(acc, product(self.term(i), self.term(n - i)));
      return acc;
    }
    case Kind::saturation:
      return saturate(children[0].term(n));
    case Kind::symbolic: {
      MonomialIdeal acc = power(prime_ideals[0], n);
      for (std::size_t i = 1; i < prime_ideals.size(); ++i)
        acc = intersect(acc, power(prime_ideals[i], n));
      return acc;
    }
    case Kind::closure:
      return integral_closure_power(*base_ideal, n);
    case Kind::product:
      return product(children[0].term(n), children[1].term(n));
    case Kind::scaled:
      return power(*base_ideal, (n + param - 1) / param);
    case Kind::table: {
      if (n <= (long)prefix.size()) return prefix[n - 1];
      MonomialIdeal acc = MonomialIdeal::zero(ring);
      for (long i = 1; i < n; ++i) acc = sum(acc, product(self.term(i), self.term(n - i)));
      return acc;
    }
    case Kind::composite: {
      MonomialIdeal acc = MonomialIdeal::unit(ring);
      for (std::size_t i = 0; i < children.size(); ++i)
        acc = product(acc, children[i].term(n * strides[i]));
      return acc;
    }
    case Kind::killed:
      return kill_variables(children[0].term(n), killed_vars);
  }
  throw std::logic_error("unreachable family kind");
}

MonomialIdeal GradedFamily::term(long n) const {
  if (n < 0) throw std::invalid_argument("family term index must be >= 0");
  {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto it = impl_->memo.find(n);
    if (it != impl_->memo.end()) return it->second;
  }
  MonomialIdeal value = impl_->compute(n, *this);
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->memo.emplace(n, std::move(value)).first->second;
}

const Ring& GradedFamily::ring() const { return impl_->ring; }

GradedFamily GradedFamily::powers(MonomialIdeal I) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::powers;
  impl->ring = I.ring();
  impl->base_ideal = std::move(I);
  return GradedFamily(std::move(impl));
}

GradedFamily GradedFamily::truncated(long a, GradedFamily base) {
  if (a < 1) throw std::invalid_argument("truncation index must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::truncated;
  impl->ring = base.ring();
  impl->param = a;
  impl->children.push_back(std::move(base));
  return GradedFamily(std::move(impl));
}

GradedFamily GradedFamily::saturation(GradedFamily base) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::saturation;
  impl->ring = base.ring();
  impl->children.push_back(std::move(base));
  return GradedFamily(std::move(impl));
}

GradedFamily GradedFamily::symbolic_powers(MonomialIdeal Q) {
  for (const auto& g : Q.gens())
    for (Coord c : g)
      if (c > 1)
        throw std::invalid_argument("symbolic powers require a squarefree ideal");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::symbolic;
  impl->ring = Q.ring();
  for (const auto& P : minimal_primes(Q)) {
    std::vector<Exponent> gens;
    for (int i : P) {
      Exponent e(Q.ring().dim, 0);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
    impl->prime_ideals.emplace_back(Q.ring(), std::move(gens));
  }
  impl->base_ideal = std::move(Q);
  return GradedFamily(std::move(impl));
}

GradedFamily GradedFamily::integral_closure_powers(MonomialIdeal I) {
  if (I.is_zero()) throw std::invalid_argument("integral closure family of zero ideal");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::closure;
  impl->ring = I.ring();
  impl->base_ideal = std::move(I);
  return GradedFamily(std::move(impl));
}

GradedFamily GradedFamily::product_family(GradedFamily F, GradedFamily G) {
  if (F.ring() != G.ring()) throw std::invalid_argument("product family: ring mismatch");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::product;
  impl->ring = F.ring();
  impl->children.push_back(std::move(F));
  impl->children.push_back(std::move(G));
  return GradedFamily(std::move(impl));
}

GradedFamily GradedFamily::scaled(MonomialIdeal I, long alpha) {
  if (alpha < 1) throw std::invalid_argument("scale must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::scaled;
  impl->ring = I.ring();
  impl->param = alpha;
  impl->base_ideal = std::move(I);
  return GradedFamily(std::move(impl));
}

GradedFamily GradedFamily::table(Ring ring, std::vector<MonomialIdeal> prefix) {
  if (prefix.empty()) throw std::invalid_argument("table family needs a nonempty prefix");
  for (const auto& I : prefix)
    if (I.ring() != ring) throw std::invalid_argument("table family: ring mismatch");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::table;
  impl->ring = std::move(ring);
  impl->prefix = std::move(prefix);
  return GradedFamily(std::move(impl));
}

GradedFamily GradedFamily::composite(std::vector<std::pair<GradedFamily, long>> factors) {
  if (factors.empty()) throw std::invalid_argument("composite family needs factors");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::composite;
  impl->ring = factors[0].first.ring();
  for (auto& [f, stride] : factors) {
    if (f.ring() != impl->ring) throw std::invalid_argument("composite family: ring mismatch");
    if (stride < 0) throw std::invalid_argument("composite family: negative stride");
    impl->children.push_back(std::move(f));
    impl->strides.push_back(stride);
  }
  return GradedFamily(std::move(impl));
}

GradedFamily GradedFamily::killed(GradedFamily base, VarSet S) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::killed;
  impl->ring = kill_variables(MonomialIdeal::zero(base.ring()), S).ring();
  impl->killed_vars = std::move(S);
  impl->children.push_back(std::move(base));
  return GradedFamily(std::move(impl));
}

std::string GradedFamily::describe() const {
  std::ostringstream os;
  switch (impl_->kind) {
    case Impl::Kind::powers:
      os << "powers" << ideal_string(*impl_->base_ideal);
      break;
    case Impl::Kind::truncated:
      os << "truncated[" << impl_->param << "](" << impl_->children[0].describe() << ")";
      break;
    case Impl::Kind::saturation:
      os << "saturation(" << impl_->children[0].describe() << ")";
      break;
    case Impl::Kind::symbolic:
      os << "symbolic" << ideal_string(*impl_->base_ideal);
      break;
    case Impl::Kind::closure:
      os << "closure-powers" << ideal_string(*impl_->base_ideal);
      break;
    case Impl::Kind::product:
      os << "product(" << impl_->children[0].describe() << ", "
         << impl_->children[1].describe() << ")";
      break;
    case Impl::Kind::scaled:
      os << "scaled[" << impl_->param << "]" << ideal_string(*impl_->base_ideal);
      break;
    case Impl::Kind::table:
      os << "table[" << impl_->prefix.size() << " terms]";
      break;
    case Impl::Kind::composite: {
      os << "composite(";
      for (std::size_t i = 0; i < impl_->children.size(); ++i) {
        if (i) os << ", ";
        os << impl_->children[i].describe() << "@" << impl_->strides[i];
      }
      os << ")";
      break;
    }
    case Impl::Kind::killed:
      os << "image(" << impl_->children[0].describe() << ")";
      break;
  }
  return os.str();
}

CheckReport verify_graded(const GradedFamily& F, long N) {
  if (N < 1) throw std::invalid_argument("verification horizon must be >= 1");
  CheckReport report;
  report.name = "graded-family-axiom";
  report.instance = F.describe();
  report.exact_mode = true;
  report.notes["horizon"] = std::to_string(N);
  report.notes["scope"] = "evidence at horizon N, not a proof";
  bool ok = F.term(0).is_unit();
  if (!ok) report.witnesses.push_back("term(0) != R");
  for (long n = 1; n <= N; ++n)
    for (long m = n; n + m <= N; ++m) {
      bool contained = F.term(n + m).contains_ideal(product(F.term(n), F.term(m)));
      if (!contained) {
        ok = false;
        report.witnesses.push_back("(" + std::to_string(n) + "," + std::to_string(m) + ")");
      }
    }
  report.add("axiom", Rat(ok ? 1 : 0), Rat(1), ok);
  report.finish();
  return report;
}

CheckReport verify_filtration(const GradedFamily& F, long N) {
  if (N < 1) throw std::invalid_argument("verification horizon must be >= 1");
  CheckReport report;
  report.name = "filtration-axiom";
  report.instance = F.describe();
  report.notes["horizon"] = std::to_string(N);
  bool ok = true;
  for (long n = 0; n < N; ++n)
    if (!F.term(n).contains_ideal(F.term(n + 1))) {
      ok = false;
      report.witnesses.push_back("n=" + std::to_string(n));
    }
  report.add("descending", Rat(ok ? 1 : 0), Rat(1), ok);
  report.finish();
  return report;
}

namespace {

bool completions_inside(const MonomialIdeal& I, Exponent& a, int pos, long rest) {
  const int d = I.ring().dim;
  if (pos == d - 1) {
    Coord keep = a[pos];
    a[pos] += (Coord)rest;
    bool in = I.contains(a);
    a[pos] = keep;
    return in;
  }
  Coord keep = a[pos];
  for (long v = 0; v <= rest; ++v) {
    a[pos] = keep + (Coord)v;
    if (!completions_inside(I, a, pos + 1, rest - v)) {
      a[pos] = keep;
      return false;
    }
  }
  a[pos] = keep;
  return true;
}

// J cap m^k inside I, generator-wise: the minimal generators of the
// intersection are g + e with |e| = max(0, k - |g|) over generators g of J.
bool intersection_inside(const MonomialIdeal& J, long k, const MonomialIdeal& I) {
  for (const auto& g : J.gens()) {
    long deficit = k - total_degree(g);
    if (deficit <= 0) {
      if (!I.contains(g)) return false;
      continue;
    }
    Exponent a = g;
    if (!completions_inside(I, a, 0, deficit)) return false;
  }
  return true;
}

}  // namespace

std::optional<LinearGrowthWitness> linear_growth_search(const GradedFamily& J,
                                                        const GradedFamily& I, long c_max,
                                                        long N) {
  if (J.ring() != I.ring()) throw std::invalid_argument("linear growth: ring mismatch");
  for (long n = 0; n <= N; ++n)
    if (!J.term(n).contains_ideal(I.term(n)))
      throw std::invalid_argument("linear growth: I_n not contained in J_n at n=" +
                                  std::to_string(n));
  // With I_n inside J_n, the two cuts agree iff J_n cap m^{cn} sits inside
  // I_n; that containment is tested generator-wise without forming the
  // intersection ideals.
  for (long c = 0; c <= c_max; ++c) {
    bool all = true;
    for (long n = 1; n <= N && all; ++n)
      all = intersection_inside(J.term(n), c * n, I.term(n));
    if (all) return LinearGrowthWitness{c, N};
  }
  return std::nullopt;
}

std::optional<long> noetherian_period(const GradedFamily& F, long q_max, long N) {
  for (long q = 1; q <= q_max; ++q) {
    bool ok = true;
    const MonomialIdeal base = F.term(q);
    for (long n = 2; n * q <= N && ok; ++n) ok = power(base, n) == F.term(n * q);
    if (ok) return q;
  }
  return std::nullopt;
}

bool family_m_primary(const GradedFamily& F, long N) {
  for (long n = 1; n <= N; ++n)
    if (!is_m_primary(F.term(n))) return false;
  return true;
}

}  // namespace gradmult
