#pragma once

#include <gmpxx.h>

#include <string>

#include "orb/errors.hpp"

namespace orb {

// Exact arbitrary-precision arithmetic.  Int/Rational wrap GMP; everything
// built on top of them is exact — the library contains no floating point in
// any mathematical path.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Int numerator(const Rational& q) { return q.get_num(); }
inline Int denominator(const Rational& q) { return q.get_den(); }

// Exact conversion to a machine integer; fails loudly on overflow or
// non-integrality instead of truncating.
long long to_int64(const Int& z);
long long to_int64(const Rational& q);

// Plain decimal rendering: integers as "-3", fractions as "5/2".
std::string to_string(const Int& z);
std::string to_string(const Rational& q);

// gcd/lcm over machine integers (used by the small Euclidean computations).
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// Exact integer square root test: returns true and sets root if n = root².
bool perfect_square(const Int& n, Int& root);
bool perfect_square_ll(long long n, long long& root);

// Squarefree decomposition n = square · squarefree (n ≥ 0); returns
// (squarefree part, square root of the square part).
void squarefree_decompose(const Int& n, Int& squarefree, Int& root);

bool is_prime_ll(long long n);

}  // namespace orb
