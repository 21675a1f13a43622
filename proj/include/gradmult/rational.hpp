#ifndef GRADMULT_RATIONAL_HPP
#define GRADMULT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gradmult {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (long i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

/// Formats exactly, "p" or "p/q".
inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Int int_pow(const Int& base, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

inline Rat rat_pow(const Rat& base, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

/// Floor of the integer k-th root of a non-negative integer.
inline Int iroot_floor(const Int& v, int k) {
  if (v < 0) throw std::invalid_argument("iroot of negative value");
  if (v == 0 || k == 1) return v;
  Int lo = 0, hi = 1;
  while (int_pow(hi, k) <= v) hi <<= 1;
  while (lo < hi - 1) {
    Int mid = (lo + hi) / 2;
    if (int_pow(mid, k) <= v)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// Exact k-th root of a rational if it is one; nullopt semantics via bool.
inline bool exact_root(const Rat& v, int k, Rat& out) {
  if (v < 0) return false;
  Int pn = iroot_floor(numerator(v), k);
  Int pd = iroot_floor(denominator(v), k);
  if (int_pow(pn, k) != numerator(v)) return false;
  if (int_pow(pd, k) != denominator(v)) return false;
  out = Rat(pn, pd);
  return true;
}

/// Shrinking rational bracket [lo, hi] around v^(1/k), v >= 0.
struct RootBracket {
  Rat lo, hi;
};

inline RootBracket root_bracket(const Rat& v, int k, const Rat& width) {
  if (v < 0) throw std::invalid_argument("root of negative value");
  RootBracket b;
  if (v == 0) {
    b.lo = b.hi = 0;
    return b;
  }
  Rat exact;
  if (exact_root(v, k, exact)) {
    b.lo = b.hi = exact;
    return b;
  }
  b.lo = 0;
  b.hi = v < 1 ? Rat(1) : v;
  while (b.hi - b.lo > width) {
    Rat mid = (b.lo + b.hi) / 2;
    if (rat_pow(mid, k) <= v)
      b.lo = mid;
    else
      b.hi = mid;
  }
  return b;
}

}  // namespace gradmult

#endif
