#include <algorithm>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "orb/eigentable.hpp"
#include "orb/errors.hpp"
#include "orb/feasibility.hpp"
#include "orb/fixtures.hpp"
#include "orb/orbitals.hpp"
#include "orb/tensor.hpp"

using namespace orb;

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FeasibleParameters solved_type_II(long long p) {
  auto result = solve_type_II(p);
  REQUIRE_MESSAGE(std::holds_alternative<FeasibleParameters>(result),
                  "expected a solution at p = ", p);
  return std::get<FeasibleParameters>(result);
}

}  // namespace

TEST_CASE("surd arithmetic handles complex conjugate pairs") {
  Surd alpha(Rational(-3, 2), Rational(3, 2), -7);  // (-3 + 3*sqrt(-7)) / 2
  CHECK_FALSE(alpha.is_real());
  CHECK_EQ(alpha.conj().conj(), alpha);
  CHECK_EQ(alpha.add(alpha.conj()), Surd(Rational(-3)));
  CHECK_EQ(alpha.norm(), Rational(9, 4) + Rational(9, 4) * Rational(7));
  CHECK(alpha.abs_less_than(Rational(7)));
  CHECK_FALSE(alpha.abs_less_than(Rational(6)));
  CHECK_THROWS_AS(alpha.sign(), Error);
  CHECK_EQ(alpha.str(), "-3/2+3/2*sqrt(-7)");
}

TEST_CASE("type tags parse and print consistently") {
  for (const CaseType& ct : all_case_types()) {
    CHECK_EQ(parse_type_tag(type_tag_name(ct.tag)), ct.tag);
  }
  CHECK_THROWS_AS(parse_type_tag("IX"), Error);
  CHECK_THROWS_AS(parse_type_tag(""), Error);
}

TEST_CASE("the eight decomposition patterns have the recorded shapes") {
  const std::vector<CaseType>& types = all_case_types();
  REQUIRE_EQ(types.size(), 8);
  std::vector<int> ranks, commutative;
  for (const CaseType& ct : types) {
    ranks.push_back(ct.rank);
    commutative.push_back(ct.commutative() ? 1 : 0);
  }
  CHECK_EQ(ranks, std::vector<int>{3, 3, 3, 4, 6, 3, 4, 6});
  // The two patterns with a doubled constituent are the non-commutative ones.
  CHECK_EQ(commutative, std::vector<int>{1, 1, 1, 1, 0, 1, 0, 1});
  // Character degrees must always account for every point: 1 + sum = 3p.
  for (long long p : {5LL, 31LL, 1009LL}) {
    for (const CaseType& ct : types) {
      Rational total(1);
      for (const Constituent& c : ct.constituents)
        total = total + Rational(static_cast<long>(c.multiplicity)) * c.degree.eval(p);
      CHECK_EQ(total, Rational(static_cast<long>(3 * p)));
    }
  }
}

TEST_CASE("prime classification finds the quadratic families") {
  CHECK_EQ(classify_prime(7).a_form_i, 1);
  CHECK_EQ(classify_prime(19).a_form_i, 2);
  CHECK_EQ(classify_prime(919).a_form_i, 17);
  CHECK_EQ(classify_prime(5).a_form_ii, 0);
  CHECK_EQ(classify_prime(83).a_form_ii, 1);
  CHECK_EQ(classify_prime(23).a_form_iii, 0);
  CHECK_EQ(classify_prime(137).a_form_iii, 1);
  CHECK(classify_prime(7).exceptional);
  CHECK(classify_prime(19).exceptional);
  CHECK(classify_prime(31).exceptional);
  FamilyMembership other = classify_prime(11);
  CHECK_FALSE(other.any());
  CHECK_FALSE(classify_prime(31).a_form_i.has_value());
  CHECK_THROWS_AS(classify_prime(9), Error);
  CHECK_THROWS_AS(classify_prime(3), Error);
  CHECK_THROWS_AS(classify_prime(-7), Error);
}

TEST_CASE("rank-3 two-family solver: solved primes and frozen rows") {
  FeasibleParameters p5 = solved_type_II(5);
  CHECK_EQ(p5.case_label, "i");
  CHECK_EQ(p5.a, 0);
  CHECK_EQ(p5.multiplicities, std::vector<long long>{1, 5, 9});
  CHECK_EQ(p5.subdegrees, std::vector<long long>{1, 6, 8});
  CHECK_EQ(p5.rows[0].values[0], Surd(-3L));
  CHECK_EQ(p5.rows[0].values[1], Surd(1L));
  CHECK_EQ(p5.rows[1].values[0], Surd(2L));
  CHECK_EQ(p5.rows[1].values[1], Surd(-2L));
  CHECK_EQ(p5.parity_ok, true);
  CHECK_EQ(p5.normalizer_divisor, 8);

  FeasibleParameters p23 = solved_type_II(23);
  CHECK_EQ(p23.case_label, "ii");
  CHECK_EQ(p23.a, 0);
  CHECK_EQ(p23.subdegrees, std::vector<long long>{1, 20, 48});
  CHECK_EQ(p23.rows[0].values[0], Surd(5L));
  CHECK_EQ(p23.rows[0].values[1], Surd(-3L));
  CHECK_EQ(p23.rows[1].values[0], Surd(-6L));
  CHECK_EQ(p23.rows[1].values[1], Surd(2L));
  CHECK_EQ(p23.parity_ok, false);
  CHECK_EQ(p23.normalizer_divisor, 2);

  CHECK_EQ(solved_type_II(83).subdegrees, std::vector<long long>{1, 88, 160});
  CHECK_EQ(solved_type_II(137).subdegrees, std::vector<long long>{1, 130, 280});
  for (long long p : {5LL, 23LL, 83LL, 137LL, 257LL, 347LL, 653LL})
    CHECK(verify_parameters(solved_type_II(p)).ok);
}

TEST_CASE("rank-3 two-family solver: refutations carry the failed square") {
  auto result = solve_type_II(7);
  REQUIRE(std::holds_alternative<Refutation>(result));
  Refutation ref = std::get<Refutation>(result);
  CHECK_EQ(ref.reason, "not-in-quadratic-family");
  CHECK_EQ(ref.data.at("16p-5"), Rational(107));
  CHECK(std::holds_alternative<Refutation>(solve_type_II(31)));
}

TEST_CASE("rank-3 two-family solver: exact feasible set below 1000") {
  // Independent recomputation from the defining square condition
  // 16p - 5 = 3b^2 with integral sub-case parameter (b = 16a+5 or 16a+11).
  std::set<long long> expected;
  for (long long a = 0;; ++a) {
    long long pi = 48 * a * a + 30 * a + 5, pii = 48 * a * a + 66 * a + 23;
    if (pi > 1000 && pii > 1000) break;
    if (pi <= 1000 && is_prime(pi)) expected.insert(pi);
    if (pii <= 1000 && is_prime(pii)) expected.insert(pii);
  }
  CHECK_EQ(expected, std::set<long long>{5, 23, 83, 137, 257, 347, 653});
  std::set<long long> solved;
  for (long long p = 5; p <= 1000; ++p)
    if (is_prime(p) && std::holds_alternative<FeasibleParameters>(solve_type_II(p)))
      solved.insert(p);
  CHECK_EQ(solved, expected);
}

TEST_CASE("rank-3 one-family solver: both sub-cases at p = 19, one at p = 7") {
  std::vector<FeasibleParameters> at7 = solve_type_III(7);
  REQUIRE_EQ(at7.size(), 1);
  CHECK_EQ(at7[0].case_label, "ii");
  CHECK_EQ(at7[0].a, 1);
  CHECK_EQ(at7[0].subdegrees, std::vector<long long>{1, 10, 10});
  CHECK_EQ(at7[0].multiplicities, std::vector<long long>{1, 14, 6});
  CHECK_EQ(at7[0].derived.at("a_111"), Rational(5));

  std::vector<FeasibleParameters> at19 = solve_type_III(19);
  REQUIRE_EQ(at19.size(), 2);
  CHECK_EQ(at19[0].case_label, "i");
  CHECK_EQ(at19[0].subdegrees, std::vector<long long>{1, 14, 42});
  CHECK_EQ(at19[0].derived.at("a_111"), Rational(1));
  CHECK_EQ(at19[1].case_label, "ii");
  CHECK_EQ(at19[1].subdegrees, std::vector<long long>{1, 24, 32});
  for (const FeasibleParameters& fp : at19) CHECK(verify_parameters(fp).ok);

  CHECK(solve_type_III(11).empty());
  CHECK(solve_type_III(31).empty());
}

TEST_CASE("rank-3 one-family first sub-case dies at a = 1 by direct check") {
  // Hand-build the parameter set the first sub-case would give at a = 1
  // (subdegrees 4 and 16): the verifier must reject it, because one
  // structure constant comes out to a^2 - a - 1 = -1.
  FeasibleParameters fp;
  fp.tag = TypeTag::III;
  fp.p = 7;
  fp.a = 1;
  fp.case_label = "i";
  fp.multiplicities = {1, 14, 6};
  fp.subdegrees = {1, 4, 16};
  fp.pairing = {0, 1, 2};
  fp.rows = {{4, {Surd(1L), Surd(-3L)}, "", {}}, {16, {Surd(-2L), Surd(2L)}, "", {}}};
  FeasibilityCheck check = verify_parameters(fp);
  CHECK_FALSE(check.ok);
  CHECK(check.first_failure.find("not a non-negative integer") != std::string::npos);
}

TEST_CASE("rank-4 paired solver: sub-case parity and conjugate columns") {
  std::vector<FeasibleParameters> at7 = solve_type_IV(7);
  REQUIRE_EQ(at7.size(), 1);
  CHECK_EQ(at7[0].case_label, "ii");
  CHECK_EQ(at7[0].subdegrees, std::vector<long long>{1, 10, 5, 5});
  CHECK_EQ(at7[0].multiplicities, std::vector<long long>{1, 7, 7, 6});
  CHECK_EQ(at7[0].pairing, std::vector<int>{0, 1, 3, 2});
  CHECK_EQ(at7[0].derived.at("a_223"), Rational(1));

  std::vector<FeasibleParameters> at19 = solve_type_IV(19);
  REQUIRE_EQ(at19.size(), 1);
  CHECK_EQ(at19[0].case_label, "i");
  CHECK_EQ(at19[0].subdegrees, std::vector<long long>{1, 14, 21, 21});
  CHECK_EQ(at19[0].derived.at("a_223"), Rational(7));
  // The transposed pair of classes carries complex-conjugate values.
  const ParameterRow& row = at19[0].rows[1];
  CHECK_FALSE(row.values[0].is_real());
  CHECK_EQ(row.values[0].conj(), row.values[1]);
  CHECK_EQ(row.values[0].rad(), -7);  // -3(a+1)(3a+1) = -63 = 9 * (-7)

  for (const FeasibleParameters& fp : at7) CHECK(verify_parameters(fp).ok);
  for (const FeasibleParameters& fp : at19) CHECK(verify_parameters(fp).ok);
  CHECK(solve_type_IV(11).empty());
  CHECK(solve_type_IV(31).empty());
}

TEST_CASE("rank-4 paired solver: exactly one sub-case per family prime") {
  for (long long a = 1; 3 * a * a + 3 * a + 1 <= 1000; ++a) {
    long long p = 3 * a * a + 3 * a + 1;
    if (!is_prime(p)) continue;
    CAPTURE(p);
    std::vector<FeasibleParameters> sols = solve_type_IV(p);
    REQUIRE_EQ(sols.size(), 1);
    CHECK_EQ(sols[0].case_label, a % 2 == 0 ? "i" : "ii");
    CHECK_EQ(sols[0].a, a);
    CHECK(verify_parameters(sols[0]).ok);
  }
}

TEST_CASE("rank-4 self-paired solver: the three exceptional primes") {
  std::vector<FeasibleParameters> at7 = solve_type_VII(7);
  REQUIRE_EQ(at7.size(), 1);
  CHECK_EQ(at7[0].subdegrees, std::vector<long long>{1, 4, 8, 8});
  CHECK_EQ(at7[0].multiplicities, std::vector<long long>{1, 8, 6, 6});
  CHECK_EQ(at7[0].rows[0].values[0], Surd(-2L));
  CHECK_EQ(at7[0].rows[0].values[1], Surd(Rational(1), Rational(1), 2));
  CHECK_EQ(at7[0].derived.at("d"), Rational(2));

  std::vector<FeasibleParameters> at19 = solve_type_VII(19);
  REQUIRE_EQ(at19.size(), 1);
  CHECK_EQ(at19[0].subdegrees, std::vector<long long>{1, 6, 20, 30});
  CHECK_EQ(at19[0].multiplicities, std::vector<long long>{1, 20, 18, 18});
  CHECK_EQ(at19[0].rows[0].values[1], Surd(Rational(3, 2), Rational(1, 2), 5));
  CHECK_EQ(at19[0].derived.at("d"), Rational(5));

  std::vector<FeasibleParameters> at31 = solve_type_VII(31);
  REQUIRE_EQ(at31.size(), 1);
  CHECK_EQ(at31[0].subdegrees, std::vector<long long>{1, 32, 20, 40});
  CHECK_EQ(at31[0].multiplicities, std::vector<long long>{1, 32, 30, 30});
  CHECK_EQ(at31[0].rows[0].values[1], Surd(Rational(0), Rational(4), 2));
  CHECK_EQ(at31[0].rows[2].values[1], Surd(Rational(2), Rational(-3), 2));

  for (const FeasibleParameters& fp : {at7[0], at19[0], at31[0]}) {
    CHECK_EQ(fp.pairing, std::vector<int>{0, 1, 2, 3});
    CHECK(verify_parameters(fp).ok);
  }
  for (long long p : {5LL, 11LL, 13LL, 37LL, 43LL}) CHECK(solve_type_VII(p).empty());
}

TEST_CASE("contradiction engines: stable reasons and exact cited data") {
  for (long long p : {5LL, 7LL, 19LL, 31LL, 37LL}) {
    CAPTURE(p);
    Refutation r1 = refute_types(p, TypeTag::I);
    CHECK_EQ(r1.reason, "eigenvalue-conjugation-clash");
    CHECK_EQ(r1.data.at("disc"), Rational(static_cast<long>(3 * p)));
    CHECK_EQ(r1.data.at("theta_sum"), Rational(-1));
    CHECK_EQ(r1.data.at("theta_product"), Rational(static_cast<long>(1 - 3 * p)) / Rational(4));
    CHECK_FALSE(r1.trace.empty());

    Refutation r5 = refute_types(p, TypeTag::V);
    CHECK_EQ(r5.reason, "eigenspace-budget-exceeded");
    CHECK_EQ(r5.data.at("eps_budget"), Rational(3));
    CHECK_EQ(r5.data.at("eps_required"), Rational(5));
    CHECK_EQ(r5.data.at("nu_sum"), Rational(-1));

    Refutation r6 = refute_types(p, TypeTag::VI);
    CHECK_EQ(r6.reason, "empty-integer-search");
    CHECK_EQ(r6.data.at("solutions"), Rational(0));

    Refutation r8 = refute_types(p, TypeTag::VIII);
    CHECK_EQ(r8.reason, "forced-subdegree-two");
    CHECK_EQ(r8.data.at("eps_sum"), Rational(3));
    CHECK_EQ(r8.data.at("survivors"), Rational(0));
  }
  CHECK_THROWS_AS(refute_types(7, TypeTag::II), Error);
  CHECK_THROWS_AS(refute_types(7, TypeTag::VII), Error);
  CHECK_THROWS_AS(refute_types(9, TypeTag::I), Error);
}

TEST_CASE("refutation root data re-substitutes into the quadratic") {
  // The cited eigenvalue pair must actually solve x^2 - (sum)x + product.
  for (long long p : {5LL, 13LL, 31LL}) {
    Refutation ref = refute_types(p, TypeTag::I);
    Rational sum = ref.data.at("theta_sum"), product = ref.data.at("theta_product");
    for (int sign : {1, -1}) {
      Surd root(Rational(-1, 2), Rational(sign, 2), 3 * p);
      Surd value = root.mul(root).sub(Surd(sum).mul(root)).add(Surd(product));
      CHECK(value.is_zero());
    }
  }
}

TEST_CASE("verifier rejects tampered parameter sets") {
  FeasibleParameters good = solved_type_II(5);
  REQUIRE(verify_parameters(good).ok);

  FeasibleParameters bad = good;
  bad.subdegrees = {1, 7, 7};  // sum preserved, rows now inconsistent
  CHECK_FALSE(verify_parameters(bad).ok);

  bad = good;
  bad.rows[0].values[0] = Surd(3L);  // sign flip breaks the zero trace
  FeasibilityCheck c2 = verify_parameters(bad);
  CHECK_FALSE(c2.ok);
  CHECK(c2.first_failure.find("trace") != std::string::npos);

  bad = good;
  bad.multiplicities = {1, 9, 5};
  CHECK_FALSE(verify_parameters(bad).ok);

  bad = good;
  bad.pairing = {0, 2, 1};  // claims the two classes are transposes
  CHECK_FALSE(verify_parameters(bad).ok);

  bad = good;
  bad.p = 11;  // wrong prime: every counting identity shifts
  CHECK_FALSE(verify_parameters(bad).ok);
}

TEST_CASE("verifier recomputes the full structure-constant tensor") {
  FeasibilityCheck check = verify_parameters(solve_type_VII(7)[0]);
  REQUIRE(check.ok);
  REQUIRE_EQ(check.rank, 4);
  // Identity slice and pairing column.
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) CHECK_EQ(check.at(0, j, k), j == k ? 1 : 0);
  // Compare against the triangle counts of the realizing degree-21 action.
  BuiltinFixture f = build_fixture("pgl27-sylow2");
  OrbitalDecomposition od = orbital_decomposition(f.group);
  IntersectionTensor tensor = intersection_tensor(od);
  REQUIRE_EQ(tensor.r, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) CHECK_EQ(check.at(i, j, k), tensor.at(i, j, k));
}

TEST_CASE("canonical keys ignore presentation choices") {
  FeasibleParameters fp = solve_type_VII(19)[0];
  std::string key = canonical_parameter_key(fp);

  // Reordering the non-trivial classes is invisible.
  FeasibleParameters shuffled = fp;
  std::swap(shuffled.rows[0], shuffled.rows[2]);
  std::swap(shuffled.subdegrees[1], shuffled.subdegrees[3]);
  CHECK_EQ(canonical_parameter_key(shuffled), key);

  // Conjugating the surd column pair (equal multiplicities) is invisible.
  FeasibleParameters conjugated = fp;
  for (ParameterRow& row : conjugated.rows) {
    row.values[1] = row.values[1].conj();
    row.values[2] = row.values[2].conj();
  }
  CHECK_EQ(canonical_parameter_key(conjugated), key);

  // A genuinely different table is visible.
  CHECK_NE(canonical_parameter_key(solve_type_VII(7)[0]), key);
}

TEST_CASE("group-derived tables flow through the same verifier") {
  BuiltinFixture f = build_fixture("a6-pairs");
  OrbitalDecomposition od = orbital_decomposition(f.group);
  EigenvalueTable table = eigentable(od, intersection_tensor(od));
  FeasibleParameters fromgroup = parameters_from_eigentable(table, TypeTag::II);
  CHECK(verify_parameters(fromgroup).ok);
  CHECK_EQ(canonical_parameter_key(fromgroup), canonical_parameter_key(solved_type_II(5)));
  // Degree must be 3p for a prime p >= 5.
  BuiltinFixture line = build_fixture("psl25-line");
  OrbitalDecomposition lod = orbital_decomposition(line.group);
  EigenvalueTable ltab = eigentable(lod, intersection_tensor(lod));
  CHECK_THROWS_AS(parameters_from_eigentable(ltab, TypeTag::II), Error);
}

TEST_CASE("normalizer divisor table over the family parameter") {
  for (long long a = 0; a <= 50; ++a) {
    CAPTURE(a);
    NormalizerBound bi = normalizer_bound_type_II("i", a);
    NormalizerBound bii = normalizer_bound_type_II("ii", a);
    CHECK_EQ(bi.divisor, a % 2 == 0 ? 8 : 2);
    CHECK_EQ(bii.divisor, a % 2 == 1 ? 8 : 2);
  }
  CHECK_THROWS_AS(normalizer_bound_type_II("iii", 0), Error);
  CHECK_THROWS_AS(normalizer_bound_type_II("i", -1), Error);
}

TEST_CASE("solver output parity annotations follow the divisor table") {
  for (long long p : {5LL, 23LL, 83LL, 137LL, 257LL, 347LL, 653LL}) {
    FeasibleParameters fp = solved_type_II(p);
    REQUIRE(fp.a.has_value());
    REQUIRE(fp.parity_ok.has_value());
    NormalizerBound bound = normalizer_bound_type_II(fp.case_label, *fp.a);
    CHECK_EQ(fp.normalizer_divisor, bound.divisor);
    CHECK_EQ(*fp.parity_ok, bound.divisor == 8);
  }
}

TEST_CASE("imprimitive catalogue evaluates and validates") {
  std::vector<ImprimitivePattern> cat = imprimitive_expectations(TypeTag::VIII);
  REQUIRE_EQ(cat.size(), 1);
  CHECK_EQ(cat[0].only_p, 7);
  CHECK_EQ(cat[0].evaluate(7), std::vector<long long>{1, 2, 2, 4, 4, 8});
  CHECK_THROWS_AS(cat[0].evaluate(19), Error);
  for (const ImprimitivePattern& pat : imprimitive_expectations(TypeTag::IV)) {
    std::vector<long long> degrees = pat.evaluate(19);
    long long total = 0;
    for (long long d : degrees) total += d;
    CHECK_EQ(total, 57);
  }
  CHECK(imprimitive_expectations(TypeTag::VII).empty());
  CHECK_THROWS_AS(imprimitive_expectations(TypeTag::I), Error);
  CHECK_THROWS_AS(imprimitive_expectations(TypeTag::II), Error);
}

TEST_CASE("renderers are stable and mutually consistent") {
  FeasibleParameters fp = solved_type_II(23);
  std::string tsv = parameters_tsv(fp);
  CHECK(tsv.find("type\tII\n") == 0);
  CHECK(tsv.find("case\tii") != std::string::npos);
  CHECK(tsv.find("row\t20\t5\t-3") != std::string::npos);
  CHECK(tsv.find("row\t48\t-6\t2") != std::string::npos);
  std::string json = parameters_json(fp);
  CHECK(json.find("\"type\":\"II\"") != std::string::npos);
  CHECK(json.find("\"subdegrees\":[1,20,48]") != std::string::npos);

  Refutation ref = refute_types(11, TypeTag::V);
  std::string rtsv = refutation_tsv(ref);
  CHECK(rtsv.find("type\tV\n") == 0);
  CHECK(rtsv.find("reason\teigenspace-budget-exceeded") != std::string::npos);
  std::string rjson = refutation_json(ref);
  CHECK(rjson.find("\"reason\":\"eigenspace-budget-exceeded\"") != std::string::npos);
}
