#include "gradmult/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace gradmult {

void Poly::add_term(const Expo& e, const Rat& c) {
  if ((int)e.size() != arity_) throw std::invalid_argument("poly arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Poly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("poly arity mismatch");
  Poly r(arity_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e(arity_);
      for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(arity_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if ((int)point.size() != arity_) throw std::invalid_argument("eval arity mismatch");
  Rat v = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < arity_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    v += t;
  }
  return v;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Poly Poly::homogeneous_part(int degree) const {
  Poly r(arity_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == degree) r.terms_.emplace(e, c);
  return r;
}

Poly Poly::constant(int arity, const Rat& c) {
  Poly r(arity);
  r.add_term(Expo(arity, 0), c);
  return r;
}

Poly Poly::binomial_basis(int arity, int var, long a, int k) {
  // binom(t - a, k) = prod_{j=0}^{k-1} (t - a - j) / k!.
  std::vector<Rat> uni = {Rat(1)};
  for (int j = 0; j < k; ++j) {
    std::vector<Rat> next(uni.size() + 1, Rat(0));
    Rat shift = Rat(-(long long)(a + j));
    for (std::size_t i = 0; i < uni.size(); ++i) {
      next[i + 1] += uni[i];
      next[i] += uni[i] * shift;
    }
    uni = std::move(next);
  }
  Rat kfact(factorial(k));
  Poly r(arity);
  for (std::size_t i = 0; i < uni.size(); ++i) {
    if (uni[i] == 0) continue;
    Expo e(arity, 0);
    e[var] = (int)i;
    r.add_term(e, uni[i] / kfact);
  }
  return r;
}

}  // namespace gradmult
