#pragma once

#include <utility>
#include <vector>

#include "orb/quadratic.hpp"
#include "orb/rational.hpp"

namespace orb {

// Integer polynomial, coefficients in ascending degree order.  The zero
// polynomial is the empty coefficient list; otherwise the leading coefficient
// is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> ascending_coeffs);

  static IntPolynomial from_roots(const std::vector<Int>& roots);  // monic

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& leading() const;
  const Int& coeff(int k) const;  // 0 for k beyond degree

  Rational evaluate(const Rational& x) const;
  QuadraticNumber evaluate(const QuadraticNumber& x) const;

  IntPolynomial mul(const IntPolynomial& o) const;
  // Exact division; fails internally if the divisor does not divide evenly.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;
  // Division with remainder over ℚ, used for gcd (result scaled primitive).
  IntPolynomial pseudo_remainder(const IntPolynomial& divisor) const;
  IntPolynomial primitive_part() const;
  static IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

  std::string str() const;  // e.g. "x^3-2*x+1"

 private:
  std::vector<Int> c_;
};

// Full factorization of f (degree ≤ 8) into linear and irreducible-quadratic
// rational factors; surd roots come back as conjugate pairs.  Fails with
// IrreducibleCubicOrWorse if an irreducible factor of degree ≥ 3 remains, and
// with NonRealQuadratic on an irreducible quadratic with negative
// discriminant — both signal input outside the real-quadratic regime this
// library works in, not a bug.
std::vector<std::pair<QuadraticNumber, int>> extract_roots(const IntPolynomial& f);

}  // namespace orb
