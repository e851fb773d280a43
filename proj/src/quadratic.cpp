#include "orb/quadratic.hpp"

#include <cstdlib>

namespace orb {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedRadicands: return "MixedRadicands";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::IrreducibleCubicOrWorse: return "IrreducibleCubicOrWorse";
    case ErrorCode::NonRealQuadratic: return "NonRealQuadratic";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NoElementOfOrderP: return "NoElementOfOrderP";
    case ErrorCode::PSquaredDividesOrder: return "PSquaredDividesOrder";
    case ErrorCode::InconsistentRepresentatives: return "InconsistentRepresentatives";
    case ErrorCode::NonCommutative: return "NonCommutative";
    case ErrorCode::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorCode::SubdegreeOne: return "SubdegreeOne";
    case ErrorCode::NotClosedUnderPairing: return "NotClosedUnderPairing";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NonCommutativeCase: return "NonCommutativeCase";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::IndexTooLarge: return "IndexTooLarge";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

QuadraticNumber::QuadraticNumber(Rational rational_part)
    : rat_(std::move(rational_part)), coeff_(0), rad_(0) {
  rat_.canonicalize();
}

QuadraticNumber::QuadraticNumber(Rational rational_part, Rational surd_coeff, Int radicand)
    : rat_(std::move(rational_part)), coeff_(std::move(surd_coeff)), rad_(std::move(radicand)) {
  rat_.canonicalize();
  coeff_.canonicalize();
  require_internal(rad_ >= 0, "negative radicand is outside the real-surd domain");
  if (coeff_ == 0) {
    rad_ = 0;
    return;
  }
  Int squarefree, root;
  squarefree_decompose(rad_, squarefree, root);
  if (squarefree <= 1) {  // rad was 0 or a perfect square: value is rational
    rat_ += coeff_ * Rational(root * squarefree);
    coeff_ = 0;
    rad_ = 0;
    return;
  }
  coeff_ *= Rational(root);
  rad_ = squarefree;
}

int QuadraticNumber::sign() const {
  if (rad_ == 0) return sgn(rat_);
  int sr = sgn(rat_);
  int sc = sgn(coeff_);
  if (sr == 0) return sc;
  if (sr == sc) return sr;
  // Opposite signs: decide by comparing rat² with coeff²·rad.  Equality would
  // force √rad rational, impossible for a squarefree radicand ≥ 2.
  Rational lhs = rat_ * rat_;
  Rational rhs = coeff_ * coeff_ * Rational(rad_);
  require_internal(lhs != rhs, "rational equals an irrational surd");
  return lhs > rhs ? sr : sc;
}

// Exact sign of r + b·√d + c·√g with d ≠ g both squarefree ≥ 2, b,c ≠ 0.
static int sign_two_surds(const Rational& r, const Rational& b, const Int& d,
                          const Rational& c, const Int& g) {
  QuadraticNumber u(r, b, d);  // lives in ℚ(√d)
  int su = u.sign();
  int sv = sgn(c);
  if (su == 0) return sv;
  if (su == sv) return su;
  // |u|² − |v|² = (r² + b²d − c²g) + 2rb√d, still a single-surd sign test.
  QuadraticNumber diff(r * r + b * b * Rational(d) - c * c * Rational(g),
                       2 * r * b, d);
  int s = diff.sign();
  require_internal(s != 0, "members of distinct quadratic fields cannot be opposite");
  return s > 0 ? su : sv;
}

bool QuadraticNumber::less_than(const QuadraticNumber& o) const {
  if (rad_ == o.rad_ || rad_ == 0 || o.rad_ == 0) {
    // Same field (or one side rational): sign of the difference decides.
    const Int& rad = rad_ != 0 ? rad_ : o.rad_;
    QuadraticNumber d(rat_ - o.rat_, coeff_ - o.coeff_, rad);
    return d.sign() < 0;
  }
  return sign_two_surds(rat_ - o.rat_, coeff_, rad_, -o.coeff_, o.rad_) < 0;
}

QuadraticNumber QuadraticNumber::add(const QuadraticNumber& o) const {
  if (rad_ != 0 && o.rad_ != 0 && rad_ != o.rad_)
    fail(ErrorCode::MixedRadicands,
         "cannot add values from different quadratic fields: " + str() + " and " + o.str());
  const Int& rad = rad_ != 0 ? rad_ : o.rad_;
  return QuadraticNumber(rat_ + o.rat_, coeff_ + o.coeff_, rad);
}

QuadraticNumber QuadraticNumber::sub(const QuadraticNumber& o) const { return add(o.neg()); }

QuadraticNumber QuadraticNumber::mul(const QuadraticNumber& o) const {
  if (rad_ != 0 && o.rad_ != 0 && rad_ != o.rad_)
    fail(ErrorCode::MixedRadicands,
         "cannot multiply values from different quadratic fields: " + str() + " and " + o.str());
  if (rad_ == 0 && o.rad_ == 0) return QuadraticNumber(rat_ * o.rat_);
  const Int& rad = rad_ != 0 ? rad_ : o.rad_;
  // (a + b√d)(e + f√d) = (ae + bf·d) + (af + be)√d
  return QuadraticNumber(rat_ * o.rat_ + coeff_ * o.coeff_ * Rational(rad),
                         rat_ * o.coeff_ + coeff_ * o.rat_, rad);
}

QuadraticNumber QuadraticNumber::neg() const {
  return QuadraticNumber(-rat_, -coeff_, rad_);
}

QuadraticNumber QuadraticNumber::conj() const {
  return QuadraticNumber(rat_, -coeff_, rad_);
}

QuadraticNumber QuadraticNumber::abs() const { return sign() < 0 ? neg() : *this; }

QuadraticNumber QuadraticNumber::inverse() const {
  if (rad_ == 0) {
    require_internal(rat_ != 0, "division by zero");
    return QuadraticNumber(1 / rat_);
  }
  // 1/(a+b√d) = (a−b√d)/(a²−b²d); the norm is nonzero for squarefree d ≥ 2.
  Rational norm = rat_ * rat_ - coeff_ * coeff_ * Rational(rad_);
  require_internal(norm != 0, "zero norm for a canonical surd");
  return QuadraticNumber(rat_ / norm, -coeff_ / norm, rad_);
}

std::string QuadraticNumber::str() const {
  if (rad_ == 0) return to_string(rat_);
  std::string out = to_string(rat_);
  out += sgn(coeff_) < 0 ? "-" : "+";
  Rational a = coeff_ < 0 ? Rational(-coeff_) : coeff_;
  out += to_string(a);
  out += "*sqrt(" + to_string(rad_) + ")";
  return out;
}

QuadraticNumber QuadraticNumber::parse(const std::string& text) {
  auto bad = [&text]() -> QuadraticNumber {
    fail(ErrorCode::BadInput, "unparseable surd literal: " + text);
  };
  try {
    size_t star = text.find("*sqrt(");
    if (star == std::string::npos) {
      if (text.empty()) return bad();
      Rational rat(text);
      rat.canonicalize();
      QuadraticNumber q{rat};
      if (q.str() != text) return bad();  // only canonical renderings pass
      return q;
    }
    if (text.back() != ')') return bad();
    // Separator sign is the last '+'/'-' strictly before the coefficient token.
    size_t sep = std::string::npos;
    for (size_t i = 1; i < star; ++i)
      if (text[i] == '+' || text[i] == '-') sep = i;
    if (sep == std::string::npos) return bad();
    Rational rat(text.substr(0, sep));
    Rational coeff(text.substr(sep + 1, star - sep - 1));
    if (text[sep] == '-') coeff = -coeff;
    Int rad(text.substr(star + 6, text.size() - star - 7));
    rat.canonicalize();
    coeff.canonicalize();
    QuadraticNumber q(rat, coeff, rad);
    if (q.str() != text) return bad();
    return q;
  } catch (const std::invalid_argument&) {  // malformed number literal inside
    return bad();
  }
}

}  // namespace orb
