#include <random>

#include "doctest.h"
#include "orb/intmatrix.hpp"
#include "orb/polynomial.hpp"
#include "orb/quadratic.hpp"
#include "orb/rational.hpp"

using namespace orb;

namespace {

QuadraticNumber surd(long rat_num, long rat_den, long co_num, long co_den, long rad) {
  return QuadraticNumber(make_rational(rat_num, rat_den), make_rational(co_num, co_den),
                         Int(rad));
}

}  // namespace

TEST_CASE("construction canonicalizes the radicand") {
  QuadraticNumber a = surd(1, 1, 1, 1, 8);  // 1 + √8 = 1 + 2√2
  CHECK_EQ(a.str(), "1+2*sqrt(2)");
  QuadraticNumber b = surd(1, 1, 3, 1, 4);  // 1 + 3√4 = 7
  CHECK(b.is_rational());
  CHECK_EQ(b.str(), "7");
  QuadraticNumber c = surd(5, 2, 0, 1, 7);  // zero coefficient collapses
  CHECK(c.is_rational());
  CHECK_EQ(c.str(), "5/2");
  QuadraticNumber d = surd(0, 1, 1, 1, 45);  // √45 = 3√5
  CHECK_EQ(d.str(), "0+3*sqrt(5)");
}

TEST_CASE("field arithmetic in a fixed quadratic field") {
  QuadraticNumber a = surd(1, 1, 1, 1, 2);   // 1 + √2
  QuadraticNumber b = surd(1, 1, -1, 1, 2);  // 1 − √2
  CHECK_EQ((a + b).str(), "2");
  CHECK_EQ((a * b).str(), "-1");
  CHECK_EQ((a - b).str(), "0+2*sqrt(2)");
  CHECK_EQ(a.conj(), b);
  CHECK_EQ(surd(3, 2, 1, 2, 5).conj().str(), "3/2-1/2*sqrt(5)");
  CHECK_EQ(a.inverse().str(), "-1+1*sqrt(2)");  // 1/(1+√2) = √2 − 1
  CHECK_EQ((a * a.inverse()).str(), "1");
  CHECK_EQ((-a).str(), "-1-1*sqrt(2)");
}

TEST_CASE("mixing distinct radicands in add or mul is rejected") {
  QuadraticNumber a = surd(0, 1, 1, 1, 2);
  QuadraticNumber b = surd(0, 1, 1, 1, 3);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * b, Error);
  try {
    a.add(b);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK_EQ(e.code(), ErrorCode::MixedRadicands);
  }
  // Rational operands are compatible with any field.
  CHECK_EQ((a + QuadraticNumber(3)).str(), "3+1*sqrt(2)");
  CHECK_EQ((a * QuadraticNumber(2)).str(), "0+2*sqrt(2)");
}

TEST_CASE("exact sign and ordering, including across fields") {
  QuadraticNumber a = surd(1, 1, 1, 1, 2);  // ≈ 2.41421
  CHECK_EQ(a.sign(), 1);
  CHECK_EQ(a.neg().sign(), -1);
  CHECK_EQ(QuadraticNumber(0).sign(), 0);
  // 1 + √2 < 29/12 = 2.41666…, a tight rational bound.
  CHECK(a.less_than(QuadraticNumber(make_rational(29, 12))));
  CHECK_FALSE(a.less_than(QuadraticNumber(make_rational(41, 17))));  // 41/17 = 2.41176…
  // 5 − 2√2 vs 3 − √2: opposite-sign components on both sides.
  CHECK(surd(3, 1, -1, 1, 2).less_than(surd(5, 1, -2, 1, 2)));
  // Cross-field: √2 < √3, and 1 + √2 < √3 + 1/2 fails (2.414 > 2.232).
  CHECK(surd(0, 1, 1, 1, 2).less_than(surd(0, 1, 1, 1, 3)));
  CHECK_FALSE(a.less_than(surd(1, 2, 1, 1, 3)));
  CHECK_EQ(surd(-2, 1, 1, 1, 3).abs().str(), "2-1*sqrt(3)");
}

TEST_CASE("canonical rendering round-trips through parse") {
  for (const char* text : {"1+1*sqrt(2)", "0-2*sqrt(2)", "3/2-1/2*sqrt(5)", "5/2", "-3",
                           "-1/3+7/2*sqrt(30)"}) {
    QuadraticNumber q = QuadraticNumber::parse(text);
    CHECK_EQ(q.str(), text);
  }
  for (const char* bad : {"", "1+sqrt(2)", "2/4", "1+1*sqrt(8)", "sqrt(2)", "1+1*sqrt(2",
                          "x+1*sqrt(2)"}) {
    CHECK_THROWS_AS(QuadraticNumber::parse(bad), Error);
  }
}

TEST_CASE("field axioms hold on pseudorandom samples") {
  std::mt19937 rng(20240901);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  auto draw = [&]() {
    return surd(num(rng), den(rng), num(rng), den(rng), 5);
  };
  for (int iter = 0; iter < 200; ++iter) {
    QuadraticNumber x = draw(), y = draw(), z = draw();
    CHECK_EQ(x + y, y + x);
    CHECK_EQ(x * y, y * x);
    CHECK_EQ((x + y) + z, x + (y + z));
    CHECK_EQ((x * y) * z, x * (y * z));
    CHECK_EQ(x * (y + z), x * y + x * z);
    CHECK_EQ((x * y).conj(), x.conj() * y.conj());
    CHECK_EQ((x + y).conj(), x.conj() + y.conj());
    if (x.sign() != 0) CHECK_EQ((x * x.inverse()).str(), "1");
    // Round-trip through the canonical text form.
    CHECK_EQ(QuadraticNumber::parse(x.str()), x);
  }
}

TEST_CASE("polynomial arithmetic and rendering") {
  IntPolynomial f(std::vector<Int>{1, -2, 0, 1});  // x³ − 2x + 1
  CHECK_EQ(f.str(), "x^3-2*x+1");
  CHECK_EQ(f.degree(), 3);
  CHECK_EQ(f.evaluate(make_rational(2)), make_rational(5));
  IntPolynomial g = IntPolynomial::from_roots({Int(1), Int(-1)});  // x² − 1
  CHECK_EQ(g.str(), "x^2-1");
  CHECK_EQ(f.mul(g).str(), "x^5-3*x^3+x^2+2*x-1");
  CHECK_EQ(f.mul(g).divide_exact(g).str(), f.str());
  // gcd picks out the common factor, normalized primitive with positive lead.
  IntPolynomial a = IntPolynomial(std::vector<Int>{-1, 1}).mul(IntPolynomial(std::vector<Int>{1, 0, 1}));
  IntPolynomial b = IntPolynomial(std::vector<Int>{-1, 1}).mul(IntPolynomial(std::vector<Int>{2, 1}));
  CHECK_EQ(IntPolynomial::gcd(a, b).str(), "x-1");
  // Evaluation at a surd: x² − 2 vanishes at √2.
  IntPolynomial x2m2(std::vector<Int>{-2, 0, 1});
  CHECK_EQ(x2m2.evaluate(surd(0, 1, 1, 1, 2)).sign(), 0);
}

TEST_CASE("root extraction over linear and quadratic factors") {
  // (x − 4)(x + 2)(x² − 2x − 1) has roots −2, 1 ± √2, 4.
  IntPolynomial f(std::vector<Int>{8, 18, -5, -4, 1});
  auto roots = extract_roots(f);
  REQUIRE_EQ(roots.size(), 4);
  CHECK_EQ(roots[0].first.str(), "-2");
  CHECK_EQ(roots[1].first.str(), "1-1*sqrt(2)");
  CHECK_EQ(roots[2].first.str(), "1+1*sqrt(2)");
  CHECK_EQ(roots[3].first.str(), "4");
  for (const auto& r : roots) CHECK_EQ(r.second, 1);
  for (const auto& r : roots) CHECK_EQ(f.evaluate(r.first).sign(), 0);
}

TEST_CASE("root multiplicities are exact") {
  // (x − 1)²(x + 3)
  IntPolynomial f = IntPolynomial::from_roots({Int(1), Int(1), Int(-3)});
  auto roots = extract_roots(f);
  REQUIRE_EQ(roots.size(), 2);
  CHECK_EQ(roots[0].first.str(), "-3");
  CHECK_EQ(roots[0].second, 1);
  CHECK_EQ(roots[1].first.str(), "1");
  CHECK_EQ(roots[1].second, 2);
  // (x² − 5)² has each surd root twice.
  IntPolynomial g(std::vector<Int>{25, 0, -10, 0, 1});
  auto surds = extract_roots(g);
  REQUIRE_EQ(surds.size(), 2);
  CHECK_EQ(surds[0].first.str(), "0-1*sqrt(5)");
  CHECK_EQ(surds[1].first.str(), "0+1*sqrt(5)");
  CHECK_EQ(surds[0].second, 2);
  CHECK_EQ(surds[1].second, 2);
}

TEST_CASE("degree-4 splits into two quadratic fields") {
  // (x² − 2)(x² − 3) = x⁴ − 5x² + 6; ordering interleaves the two fields.
  IntPolynomial f(std::vector<Int>{6, 0, -5, 0, 1});
  auto roots = extract_roots(f);
  REQUIRE_EQ(roots.size(), 4);
  CHECK_EQ(roots[0].first.str(), "0-1*sqrt(3)");
  CHECK_EQ(roots[1].first.str(), "0-1*sqrt(2)");
  CHECK_EQ(roots[2].first.str(), "0+1*sqrt(2)");
  CHECK_EQ(roots[3].first.str(), "0+1*sqrt(3)");
}

TEST_CASE("non-quadratic irreducibles are rejected with the right code") {
  try {
    extract_roots(IntPolynomial(std::vector<Int>{-2, 0, 0, 1}));  // x³ − 2
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK_EQ(e.code(), ErrorCode::IrreducibleCubicOrWorse);
  }
  try {
    extract_roots(IntPolynomial(std::vector<Int>{1, 0, 1}));  // x² + 1
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK_EQ(e.code(), ErrorCode::NonRealQuadratic);
  }
}

TEST_CASE("characteristic polynomial by exact recurrence") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2; m.at(0, 1) = 1;
  m.at(1, 0) = 1; m.at(1, 1) = 2;
  CHECK_EQ(charpoly(m).str(), "x^2-4*x+3");
  auto eig = extract_roots(charpoly(m));
  REQUIRE_EQ(eig.size(), 2);
  CHECK_EQ(eig[0].first.str(), "1");
  CHECK_EQ(eig[1].first.str(), "3");

  IntMatrix ones(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ones.at(i, j) = 1;
  CHECK_EQ(charpoly(ones).str(), "x^3-3*x^2");
  auto spec = extract_roots(charpoly(ones));
  REQUIRE_EQ(spec.size(), 2);
  CHECK_EQ(spec[0].first.str(), "0");
  CHECK_EQ(spec[0].second, 2);
  CHECK_EQ(spec[1].first.str(), "3");
  CHECK_EQ(spec[1].second, 1);

  // Surd spectrum: [[1,2],[1,-1]] has charpoly x² − 3 with eigenvalues ±√3.
  IntMatrix s(2, 2);
  s.at(0, 0) = 1; s.at(0, 1) = 2;
  s.at(1, 0) = 1; s.at(1, 1) = -1;
  auto sp = extract_roots(charpoly(s));
  REQUIRE_EQ(sp.size(), 2);
  CHECK_EQ(sp[0].first.str(), "0-1*sqrt(3)");
  CHECK_EQ(sp[1].first.str(), "0+1*sqrt(3)");

  try {
    charpoly(IntMatrix(2, 3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK_EQ(e.code(), ErrorCode::NotSquare);
  }
}

TEST_CASE("matrix helpers behave") {
  IntMatrix m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 4; m.at(1, 1) = 5; m.at(1, 2) = 6;
  IntMatrix t = m.transpose();
  CHECK_EQ(t.rows(), 3);
  CHECK_EQ(t.at(2, 1), 6);
  IntMatrix p = m.mul(t);  // 2×2 Gram matrix
  CHECK_EQ(p.at(0, 0), 14);
  CHECK_EQ(p.at(0, 1), 32);
  CHECK_EQ(p.at(1, 1), 77);
  CHECK_EQ(p.trace(), 91);
  CHECK_EQ(IntMatrix::identity(3).mul(t), t);
}

TEST_CASE("integer utilities") {
  Int root;
  CHECK(perfect_square(Int(144), root));
  CHECK_EQ(root, 12);
  CHECK_FALSE(perfect_square(Int(145), root));
  Int squarefree, sq;
  squarefree_decompose(Int(360), squarefree, sq);  // 360 = 36·10
  CHECK_EQ(squarefree, 10);
  CHECK_EQ(sq, 6);
  squarefree_decompose(Int(1), squarefree, sq);
  CHECK_EQ(squarefree, 1);
  CHECK_EQ(sq, 1);
  CHECK(is_prime_ll(97));
  CHECK_FALSE(is_prime_ll(91));
  CHECK_EQ(gcd_ll(48, 36), 12);
  CHECK_EQ(lcm_ll(6, 10), 30);
}
