#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ovalsig {

// Exact arbitrary-precision arithmetic. All invariant computations run over
// these types; no floating point is used anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Representative of x mod p in [0, p-1]. Requires p > 0.
inline Int mod_reduce(const Int& x, const Int& p) {
  Int r = x % p;
  if (r < 0) r += p;
  return r;
}

/// Inverse of a modulo p (p prime, a not divisible by p), via extended Euclid.
inline Int mod_inverse(const Int& a, const Int& p) {
  Int r0 = p, r1 = mod_reduce(a, p);
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw UndefinedResidueError();
  return mod_reduce(t0, p);
}

/// Residue of a rational a/b mod p: a * b^{-1} in [0, p-1].
/// Throws UndefinedResidueError when p divides b.
inline Int residue(const Rational& x, const Int& p) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  if (den % p == 0) throw UndefinedResidueError();
  return mod_reduce(num * mod_inverse(den, p), p);
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline bool is_odd_prime(const Int& p) { return p != 2 && is_prime(p); }

/// Smallest odd prime strictly greater than n.
inline Int next_odd_prime(Int n) {
  if (n < 3) n = 2;  // first candidate below is 3
  Int c = n + 1;
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

/// Positive divisors of |n| in increasing order. Requires n != 0.
inline std::vector<Int> divisors(const Int& n) {
  Int m = boost::multiprecision::abs(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Canonical text form of a rational: "p/q", or just "p" for integers.
inline std::string rational_str(const Rational& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

/// Text form that always shows a denominator ("0/1", "1/2").
inline std::string fraction_str(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

}  // namespace ovalsig
