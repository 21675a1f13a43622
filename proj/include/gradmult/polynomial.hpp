#ifndef GRADMULT_POLYNOMIAL_HPP
#define GRADMULT_POLYNOMIAL_HPP

#include <map>
#include <vector>

#include "gradmult/rational.hpp"

namespace gradmult {

/// Monomial exponent in the fit variables (not to be confused with ring
/// exponents).
using Expo = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Deterministic term order (lexicographic on exponents).
class Poly {
 public:
  Poly() = default;
  explicit Poly(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  void add_term(const Expo& e, const Rat& c);
  Rat coeff(const Expo& e) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return terms_ != o.terms_; }

  Rat eval(const std::vector<Rat>& point) const;
  int total_degree() const;  // -1 for the zero polynomial
  Poly homogeneous_part(int degree) const;

  static Poly constant(int arity, const Rat& c);
  /// The univariate polynomial binom(t - a, k) promoted to `arity` variables
  /// in variable `var`.
  static Poly binomial_basis(int arity, int var, long a, int k);

 private:
  int arity_ = 0;
  std::map<Expo, Rat> terms_;
};

}  // namespace gradmult

#endif
