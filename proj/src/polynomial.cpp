#include "orb/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace orb {
namespace {

// Rational long division of integer polynomials.  Returns false when the
// division leaves a remainder or a non-integer quotient coefficient.
bool try_divide(const IntPolynomial& f, const IntPolynomial& d, IntPolynomial& quotient_out) {
  if (d.is_zero()) return false;
  if (f.is_zero()) {
    quotient_out = IntPolynomial();
    return true;
  }
  if (f.degree() < d.degree()) return false;
  std::vector<Rational> rem(f.coeffs().size());
  for (size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(f.coeffs()[i]);
  int dq = f.degree() - d.degree();
  std::vector<Rational> q(size_t(dq) + 1, Rational(0));
  Rational lead{d.leading()};
  for (int k = dq; k >= 0; --k) {
    Rational factor = rem[size_t(k + d.degree())] / lead;
    factor.canonicalize();
    q[size_t(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) rem[size_t(k + j)] -= factor * Rational(d.coeff(j));
  }
  for (const Rational& r : rem)
    if (r != 0) return false;
  std::vector<Int> qi(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (!is_integer(q[i])) return false;
    qi[i] = numerator(q[i]);
  }
  quotient_out = IntPolynomial(std::move(qi));
  return true;
}

IntPolynomial derivative(const IntPolynomial& f) {
  std::vector<Int> d;
  for (int k = 1; k <= f.degree(); ++k) d.push_back(f.coeff(k) * k);
  return IntPolynomial(std::move(d));
}

// Positive divisors of |n| in ascending order (n ≠ 0).
std::vector<Int> positive_divisors(const Int& n) {
  Int a = n < 0 ? Int(-n) : n;
  require_internal(a != 0, "divisor enumeration of zero");
  std::vector<Int> small, large;
  for (Int d(1); d * d <= a; ++d) {
    if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) == 0) continue;
    small.push_back(d);
    Int q = a / d;
    if (q != d) large.push_back(q);
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

// Roots of an integer quadratic already known to have no rational roots.
std::vector<QuadraticNumber> quadratic_roots(const IntPolynomial& g) {
  require_internal(g.degree() == 2, "quadratic solver on non-quadratic input");
  const Int& a = g.coeff(2);
  const Int& b = g.coeff(1);
  const Int& c = g.coeff(0);
  Int disc = b * b - 4 * a * c;
  if (disc < 0)
    fail(ErrorCode::NonRealQuadratic,
         "quadratic factor " + g.str() + " has no real roots (negative discriminant " +
             to_string(disc) + ")");
  Int squarefree, root;
  squarefree_decompose(disc, squarefree, root);
  require_internal(squarefree > 1, "square discriminant escaped rational-root extraction");
  Rational rat(-b, 2 * a);
  Rational coeff(root, 2 * a);
  rat.canonicalize();
  coeff.canonicalize();
  return {QuadraticNumber(rat, coeff, squarefree), QuadraticNumber(rat, -coeff, squarefree)};
}

// Searches for an integer quadratic factor of h, where h has no rational
// roots and h(0) ≠ 0.  A monic quadratic divisor g of the monicized transform
// satisfies g(1) | H(1) and g(−1) | H(−1), which pins down finitely many
// coefficient pairs to test.
bool find_quadratic_factor(const IntPolynomial& h, IntPolynomial& factor_out,
                           IntPolynomial& quotient_out) {
  const Int& a = h.leading();
  int m = h.degree();
  // H(y) = a^(m−1)·h(y/a) is monic with integer coefficients H_k = h_k·a^(m−1−k).
  std::vector<Int> hc(size_t(m) + 1);
  hc[size_t(m)] = 1;
  Int pw(1);
  for (int k = m - 1; k >= 0; --k) {
    hc[size_t(k)] = h.coeff(k) * pw;
    pw *= a;
  }
  IntPolynomial big(std::move(hc));
  Int at1 = numerator(big.evaluate(Rational(1)));
  Int atm1 = numerator(big.evaluate(Rational(-1)));
  require_internal(big.coeff(0) != 0 && at1 != 0 && atm1 != 0,
                   "rational roots must be removed before the quadratic-factor search");
  std::vector<Int> div1 = positive_divisors(at1);
  std::vector<Int> divm1 = positive_divisors(atm1);
  require_internal(div1.size() * divm1.size() <= 1'000'000,
                   "quadratic-factor search space too large");
  for (const Int& d1abs : div1)
    for (int s1 : {1, -1})
      for (const Int& dm1abs : divm1)
        for (int s2 : {1, -1}) {
          Int d1 = s1 * d1abs;         // candidate g(1)  = 1 + B + C
          Int dm1 = s2 * dm1abs;       // candidate g(−1) = 1 − B + C
          Int two_b = d1 - dm1;
          if (mpz_even_p(two_b.get_mpz_t()) == 0) continue;
          Int cb = two_b / 2;
          Int cc = (d1 + dm1) / 2 - 1;
          if (cc == 0) continue;  // would give the rational root 0
          if (mpz_divisible_p(big.coeff(0).get_mpz_t(), cc.get_mpz_t()) == 0) continue;
          IntPolynomial g(std::vector<Int>{cc, cb, 1});
          IntPolynomial q;
          if (!try_divide(big, g, q)) continue;
          // Map y = a·x back: the matching factor of h is a²x² + aBx + C.
          IntPolynomial gx(std::vector<Int>{cc, a * cb, a * a});
          factor_out = gx.primitive_part();
          require_internal(try_divide(h, factor_out, quotient_out),
                           "mapped-back quadratic factor must divide the original");
          return true;
        }
  return false;
}

// Exact multiplicity of an irreducible factor inside f.
int factor_multiplicity(const IntPolynomial& f, const IntPolynomial& factor) {
  int count = 0;
  IntPolynomial cur = f, q;
  while (try_divide(cur, factor, q)) {
    ++count;
    cur = q;
  }
  return count;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::from_roots(const std::vector<Int>& roots) {
  IntPolynomial p(std::vector<Int>{1});
  for (const Int& r : roots) p = p.mul(IntPolynomial(std::vector<Int>{-r, 1}));
  return p;
}

const Int& IntPolynomial::leading() const {
  require_internal(!c_.empty(), "zero polynomial has no leading coefficient");
  return c_.back();
}

const Int& IntPolynomial::coeff(int k) const {
  static const Int zero(0);
  if (k < 0 || size_t(k) >= c_.size()) return zero;
  return c_[size_t(k)];
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  acc.canonicalize();
  return acc;
}

QuadraticNumber IntPolynomial::evaluate(const QuadraticNumber& x) const {
  QuadraticNumber acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc.mul(x).add(QuadraticNumber(Rational(*it)));
  return acc;
}

IntPolynomial IntPolynomial::mul(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  IntPolynomial q;
  require_internal(try_divide(*this, divisor, q), "declared-exact polynomial division failed: (" +
                                                      str() + ") / (" + divisor.str() + ")");
  return q;
}

IntPolynomial IntPolynomial::pseudo_remainder(const IntPolynomial& divisor) const {
  require_internal(!divisor.is_zero(), "pseudo-division by the zero polynomial");
  int dd = divisor.degree();
  if (is_zero() || degree() < dd) return *this;
  const Int& lead = divisor.leading();
  std::vector<Int> r = c_;
  auto degree_of = [](const std::vector<Int>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[size_t(d)] == 0) --d;
    return d;
  };
  int dr = degree_of(r);
  while (dr >= dd) {
    Int top = r[size_t(dr)];
    for (Int& x : r) x *= lead;
    for (int j = 0; j <= dd; ++j) r[size_t(dr - dd + j)] -= top * divisor.coeff(j);
    dr = degree_of(r);
  }
  r.resize(size_t(dr + 1));
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  Int g(0);
  for (const Int& x : c_) g = ::gcd(g, x);
  if (leading() < 0) g = -g;
  std::vector<Int> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPolynomial r = a.pseudo_remainder(b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Int& a = coeff(k);
    if (a == 0) continue;
    std::string mag = to_string(a < 0 ? Int(-a) : a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? "-" : "+";
    }
    if (k == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out;
}

std::vector<std::pair<QuadraticNumber, int>> extract_roots(const IntPolynomial& f) {
  if (f.is_zero()) fail(ErrorCode::BadInput, "every value is a root of the zero polynomial");
  if (f.degree() > 8)
    fail(ErrorCode::BadInput,
         "root extraction limited to degree 8, got degree " + std::to_string(f.degree()));
  std::vector<std::pair<QuadraticNumber, int>> out;
  if (f.degree() == 0) return out;

  IntPolynomial fp = f.primitive_part();
  IntPolynomial common = IntPolynomial::gcd(fp, derivative(fp));
  IntPolynomial w = common.degree() > 0 ? fp.divide_exact(common).primitive_part() : fp;

  struct FoundFactor {
    IntPolynomial factor;
    std::vector<QuadraticNumber> roots;
  };
  std::vector<FoundFactor> found;
  IntPolynomial rem = w;

  if (rem.coeff(0) == 0) {
    IntPolynomial xf(std::vector<Int>{0, 1});
    rem = rem.divide_exact(xf);
    found.push_back({xf, {QuadraticNumber(0)}});
  }

  // Rational roots p/q of the squarefree part: p | constant, q | leading.
  bool progress = true;
  while (progress && rem.degree() >= 1) {
    progress = false;
    std::vector<Int> ps = positive_divisors(rem.coeff(0));
    std::vector<Int> qs = positive_divisors(rem.leading());
    for (const Int& q : qs) {
      for (const Int& p : ps) {
        for (int s : {1, -1}) {
          if (::gcd(p, q) != 1) continue;
          Int num = s < 0 ? Int(-p) : p;
          Rational cand(num, q);
          cand.canonicalize();
          if (rem.evaluate(cand) != 0) continue;
          IntPolynomial lin(std::vector<Int>{-num, q});
          rem = rem.divide_exact(lin);
          found.push_back({lin, {QuadraticNumber(cand)}});
          progress = true;  // restart the scan on the deflated remainder
          break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }

  while (rem.degree() >= 3) {
    IntPolynomial factor, quotient;
    if (!find_quadratic_factor(rem, factor, quotient))
      fail(ErrorCode::IrreducibleCubicOrWorse,
           "irreducible factor of degree >= 3 remains: " + rem.str());
    found.push_back({factor, quadratic_roots(factor)});
    rem = quotient;
  }
  if (rem.degree() == 2) {
    IntPolynomial factor = rem.primitive_part();
    found.push_back({factor, quadratic_roots(factor)});
  } else {
    require_internal(rem.degree() <= 0, "linear factor escaped rational-root deflation");
  }

  for (const FoundFactor& ff : found) {
    int mult = factor_multiplicity(fp, ff.factor.primitive_part());
    require_internal(mult >= 1, "factor of the squarefree part must divide the original");
    for (const QuadraticNumber& r : ff.roots) out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first.less_than(y.first); });
  return out;
}

}  // namespace orb
