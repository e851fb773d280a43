#include "orb/rational.hpp"

#include <numeric>

namespace orb {

long long to_int64(const Int& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::Internal, "integer overflows 64 bits: " + z.get_str());
  return z.get_si();
}

long long to_int64(const Rational& q) {
  if (!is_integer(q)) fail(ErrorCode::Internal, "not an integer: " + q.get_str());
  return to_int64(Int(q.get_num()));
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

bool perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

bool perfect_square_ll(long long n, long long& root) {
  Int r;
  if (!perfect_square(Int(static_cast<long>(n)), r)) return false;
  root = to_int64(r);
  return true;
}

void squarefree_decompose(const Int& n, Int& squarefree, Int& root) {
  require_internal(n >= 0, "squarefree_decompose expects n >= 0");
  squarefree = 1;
  root = 1;
  if (n == 0) {
    squarefree = 0;
    return;
  }
  Int rest = n;
  // Trial division is ample: radicands in this project stay tiny.
  for (Int d = 2; d * d <= rest; ++d) {
    Int dd = d * d;
    while (rest % dd == 0) {
      rest /= dd;
      root *= d;
    }
  }
  squarefree = rest;
}

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace orb
