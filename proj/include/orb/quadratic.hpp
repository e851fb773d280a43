#pragma once

#include <string>

#include "orb/rational.hpp"

namespace orb {

// A real quadratic surd in canonical form: value = rat + coeff·√rad.
//
// Canonical form invariants (established by the constructor):
//   - rad is squarefree; rad = 0 or rad ≥ 2;
//   - coeff = 0 ⇒ rad = 0;
// so equality of values is structural equality of (rat, coeff, rad).
// Instances are immutable after construction and safe to share across threads.
class QuadraticNumber {
 public:
  QuadraticNumber() : rat_(0), coeff_(0), rad_(0) {}
  QuadraticNumber(Rational rational_part);  // NOLINT: implicit by design
  QuadraticNumber(long rational_part) : QuadraticNumber(Rational(rational_part)) {}
  // General constructor; extracts square factors of the radicand.
  QuadraticNumber(Rational rational_part, Rational surd_coeff, Int radicand);

  const Rational& rat() const { return rat_; }
  const Rational& coeff() const { return coeff_; }
  const Int& rad() const { return rad_; }

  bool is_rational() const { return rad_ == 0; }
  bool is_zero() const { return rat_ == 0 && coeff_ == 0; }

  bool operator==(const QuadraticNumber& o) const {
    return rat_ == o.rat_ && coeff_ == o.coeff_ && rad_ == o.rad_;
  }
  bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }

  // Exact comparison by real value (no floating point).
  bool less_than(const QuadraticNumber& o) const;

  // Arithmetic.  add/mul require equal radicands or a rational operand
  // (MixedRadicands otherwise); the result is again canonical.
  QuadraticNumber add(const QuadraticNumber& o) const;
  QuadraticNumber sub(const QuadraticNumber& o) const;
  QuadraticNumber mul(const QuadraticNumber& o) const;
  QuadraticNumber neg() const;
  QuadraticNumber conj() const;  // rat − coeff·√rad
  QuadraticNumber abs() const;   // by exact sign analysis
  // Multiplicative inverse within ℚ(√rad); fails on zero.
  QuadraticNumber inverse() const;

  // Sign of the real value: −1, 0, +1 (exact).
  int sign() const;

  // Canonical rendering: rationals plainly ("-3", "1/2"); surds as
  // "x+y*sqrt(d)" / "x-y*sqrt(d)" with x always present (possibly "0").
  std::string str() const;
  // Inverse of str(); accepts exactly the canonical forms.
  static QuadraticNumber parse(const std::string& text);

 private:
  Rational rat_;
  Rational coeff_;
  Int rad_;
};

inline QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
  return a.add(b);
}
inline QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
  return a.sub(b);
}
inline QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
  return a.mul(b);
}
inline QuadraticNumber operator-(const QuadraticNumber& a) { return a.neg(); }

}  // namespace orb
