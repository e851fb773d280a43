#include "doctest.h"
#include "orb/amalgam.hpp"
#include "orb/eigentable.hpp"
#include "orb/fixtures.hpp"
#include "orb/polynomial.hpp"
#include "orb/tensor.hpp"

using namespace orb;

namespace {

struct Scheme {
  OrbitalDecomposition od;
  IntersectionTensor tensor;
};

Scheme scheme_of(const std::string& fixture) {
  Scheme s;
  s.od = orbital_decomposition(build_fixture(fixture).group);
  s.tensor = intersection_tensor(s.od);
  return s;
}

QuadraticNumber qn(long num, long den = 1) { return QuadraticNumber(make_rational(num, den)); }

QuadraticNumber surd(long rat_num, long rat_den, long co_num, long co_den, long rad) {
  return QuadraticNumber(make_rational(rat_num, rat_den), make_rational(co_num, co_den),
                         Int(rad));
}

}  // namespace

TEST_CASE("triangle counts of the A6 pairs action") {
  Scheme s = scheme_of("a6-pairs");
  REQUIRE_EQ(s.tensor.r, 3);
  // Class 1 = "disjoint pairs" (valency 6), class 2 = "meeting pairs"
  // (valency 8); counted by hand on {0,1} and a partner.
  CHECK_EQ(s.tensor.at(1, 1, 1), 1);
  CHECK_EQ(s.tensor.at(1, 1, 2), 3);
  CHECK_EQ(s.tensor.at(1, 2, 2), 3);
  CHECK_EQ(s.tensor.at(2, 2, 1), 4);
  CHECK_EQ(s.tensor.at(2, 2, 2), 4);
  CHECK(s.tensor.commutative());
}

TEST_CASE("triangle counts of the coset fixture of degree 57") {
  Scheme s = scheme_of("psl219-a5cosets");
  REQUIRE_EQ(s.tensor.r, 4);
  // The valency-6 suborbit graph is triangle-free and pentagon-rich.
  CHECK_EQ(s.tensor.at(1, 1, 0), 6);
  CHECK_EQ(s.tensor.at(1, 1, 1), 0);
  CHECK_EQ(s.tensor.at(1, 1, 2), 0);
  CHECK_EQ(s.tensor.at(1, 1, 3), 1);
  CHECK_EQ(s.tensor.at(2, 2, 1), 10);
  CHECK_EQ(s.tensor.at(3, 3, 3), 14);
}

TEST_CASE("a regular cyclic action has shift structure constants") {
  GroupData c5 = build_fixture("c5-regular").group;
  OrbitalDecomposition od = orbital_decomposition(c5);
  IntersectionTensor t = intersection_tensor(od);
  REQUIRE_EQ(t.r, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) CHECK_EQ(t.at(i, j, k), (i + j) % 5 == k ? 1 : 0);
}

TEST_CASE("tensor row sums and the pairing recount") {
  for (const char* name : {"a6-pairs", "pgl27-sylow2", "psl27-sylow2"}) {
    CAPTURE(name);
    Scheme s = scheme_of(name);
    for (int i = 0; i < s.tensor.r; ++i)
      for (int j = 0; j < s.tensor.r; ++j) {
        long long sum = 0;
        for (int k = 0; k < s.tensor.r; ++k) sum += s.tensor.at(i, j, k) * s.od.subdegrees[size_t(k)];
        CHECK_EQ(sum, s.od.subdegrees[size_t(i)] * s.od.subdegrees[size_t(j)]);
      }
  }
}

TEST_CASE("basic matrices satisfy the trace identities") {
  for (const char* name : {"a6-pairs", "psl25-line", "pgl27-sylow2", "psl27-sylow2"}) {
    CAPTURE(name);
    Scheme s = scheme_of(name);
    TraceReport report = verify_trace_identities(s.od, s.tensor);
    CHECK_MESSAGE(report.pass, report.first_failure);
  }
}

TEST_CASE("a tampered tensor is caught by the trace identities") {
  Scheme s = scheme_of("a6-pairs");
  IntersectionTensor bad = s.tensor;
  bad.at(1, 1, 1) += 1;
  TraceReport report = verify_trace_identities(s.od, bad);
  CHECK_FALSE(report.pass);
  CHECK_MESSAGE(report.first_failure.find("a_{ijk}") != std::string::npos,
                "failure should name the triple-product identity: ", report.first_failure);
}

TEST_CASE("regular matrices carry the class eigenvalues") {
  Scheme s = scheme_of("a6-pairs");
  std::vector<IntMatrix> regs = regular_matrices(s.tensor);
  REQUIRE_EQ(regs.size(), 3);
  // Class 2 (valency 8): eigenvalues 8, 2, −2, all simple.
  std::vector<std::pair<QuadraticNumber, int>> roots = extract_roots(charpoly(regs[2]));
  REQUIRE_EQ(roots.size(), 3);
  CHECK_EQ(roots[0].first, qn(-2));
  CHECK_EQ(roots[1].first, qn(2));
  CHECK_EQ(roots[2].first, qn(8));
  for (const auto& [value, mult] : roots) CHECK_EQ(mult, 1);

  // Degree-21 Sylow fixture, class 1 (valency 4): eigenvalues 4, −2, 1±√2.
  Scheme p = scheme_of("pgl27-sylow2");
  std::vector<std::pair<QuadraticNumber, int>> r4 =
      extract_roots(charpoly(regular_matrices(p.tensor)[1]));
  REQUIRE_EQ(r4.size(), 4);
  CHECK_EQ(r4[0].first, qn(-2));
  CHECK_EQ(r4[1].first, surd(1, 1, -1, 1, 2));
  CHECK_EQ(r4[2].first, surd(1, 1, 1, 1, 2));
  CHECK_EQ(r4[3].first, qn(4));
}

TEST_CASE("eigentable of the A6 pairs action") {
  Scheme s = scheme_of("a6-pairs");
  EigenvalueTable t = eigentable(s.od, s.tensor);
  REQUIRE_EQ(t.columns.size(), 3);
  CHECK_EQ(t.columns[0].multiplicity, Int(1));
  CHECK_EQ(t.columns[0].values, std::vector<QuadraticNumber>{qn(1), qn(6), qn(8)});
  CHECK_EQ(t.columns[1].multiplicity, Int(5));
  CHECK_EQ(t.columns[1].values, std::vector<QuadraticNumber>{qn(1), qn(-3), qn(2)});
  CHECK_EQ(t.columns[2].multiplicity, Int(9));
  CHECK_EQ(t.columns[2].values, std::vector<QuadraticNumber>{qn(1), qn(1), qn(-2)});
}

TEST_CASE("eigentable of the degree-21 Sylow fixture") {
  Scheme s = scheme_of("pgl27-sylow2");
  EigenvalueTable t = eigentable(s.od, s.tensor);
  REQUIRE_EQ(t.columns.size(), 4);
  // Multiplicities 1, 8, 6, 6; the subdegree-4 row reads 4, −2, 1∓√2.
  CHECK_EQ(t.columns[1].multiplicity, Int(8));
  CHECK_EQ(t.columns[2].multiplicity, Int(6));
  CHECK_EQ(t.columns[3].multiplicity, Int(6));
  CHECK_EQ(t.columns[1].values[1], qn(-2));
  CHECK_EQ(t.columns[2].values[1], surd(1, 1, -1, 1, 2));
  CHECK_EQ(t.columns[3].values[1], surd(1, 1, 1, 1, 2));
  CHECK_EQ(t.columns[2].values[2], surd(0, 1, 2, 1, 2));
  CHECK_EQ(t.columns[2].values[3], surd(-2, 1, -1, 1, 2));
  // The two surd columns are conjugate.
  for (int i = 0; i < 4; ++i)
    CHECK_EQ(t.columns[2].values[size_t(i)].conj(), t.columns[3].values[size_t(i)]);
}

TEST_CASE("eigentable of the degree-57 coset fixture") {
  Scheme s = scheme_of("psl219-a5cosets");
  EigenvalueTable t = eigentable(s.od, s.tensor);
  REQUIRE_EQ(t.columns.size(), 4);
  CHECK_EQ(t.columns[1].multiplicity, Int(20));
  CHECK_EQ(t.columns[2].multiplicity, Int(18));
  // Subdegree-6 row: 6, −3, (3∓√5)/2.
  CHECK_EQ(t.columns[1].values[1], qn(-3));
  CHECK_EQ(t.columns[2].values[1], surd(3, 2, -1, 2, 5));
  CHECK_EQ(t.columns[3].values[1], surd(3, 2, 1, 2, 5));
  // Subdegree-30 row: 30, 3, (−5∓3√5)/2.
  CHECK_EQ(t.columns[1].values[3], qn(3));
  CHECK_EQ(t.columns[2].values[3], surd(-5, 2, -3, 2, 5));
}

TEST_CASE("eigentable columns satisfy the orthogonality relations") {
  for (const char* name : {"a6-pairs", "a7-pairs", "pgl27-sylow2", "psl219-a5cosets"}) {
    CAPTURE(name);
    Scheme s = scheme_of(name);
    EigenvalueTable t = eigentable(s.od, s.tensor);
    const int r = t.rank();
    // Σ_λ f_λ·θ_{iλ}·θ_{jλ} = n·m_i·δ_{j,i*} — checked in exact arithmetic.
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        QuadraticNumber sum = qn(0);
        for (int l = 0; l < r; ++l) {
          QuadraticNumber f{Rational(t.columns[size_t(l)].multiplicity)};
          sum = sum.add(f.mul(t.columns[size_t(l)].values[size_t(i)])
                            .mul(t.columns[size_t(l)].values[size_t(j)]));
        }
        long expect = t.pairing[size_t(i)] == j ? long(t.n * t.subdegrees[size_t(i)]) : 0;
        CHECK_EQ(sum, qn(expect));
      }
    // Σ_i θ_{iλ} vanishes on every non-valency column (row sums of W − I).
    for (int l = 1; l < r; ++l) {
      QuadraticNumber sum = qn(0);
      for (int i = 0; i < r; ++i) sum = sum.add(t.columns[size_t(l)].values[size_t(i)]);
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("eigentable rejection: non-commutative algebra") {
  Scheme s = scheme_of("psl27-sylow2");
  CHECK_FALSE(s.tensor.commutative());
  CHECK_THROWS_WITH_AS(eigentable(s.od, s.tensor), doctest::Contains("NonCommutative"), Error);
}

TEST_CASE("eigentable rejection: eigenvalues of degree > 2") {
  Scheme s = scheme_of("c5-regular");
  CHECK_THROWS_WITH_AS(eigentable(s.od, s.tensor),
                       doctest::Contains("IrreducibleCubicOrWorse"), Error);
}

TEST_CASE("eigentable rejection: complex quadratic eigenvalues") {
  Scheme s = scheme_of("c6-regular");
  CHECK_THROWS_WITH_AS(eigentable(s.od, s.tensor), doctest::Contains("NonRealQuadratic"),
                       Error);
}

TEST_CASE("strict dominance of the subdegree in its row") {
  for (const char* name : {"a6-pairs", "s7-pairs", "pgl27-sylow2", "psl219-a5cosets"}) {
    CAPTURE(name);
    Scheme s = scheme_of(name);
    EigenvalueTable t = eigentable(s.od, s.tensor);
    for (int i = 1; i < t.rank(); ++i) CHECK(perron_frobenius_check(t, i));
    CHECK_THROWS_WITH_AS(perron_frobenius_check(t, 0), doctest::Contains("SubdegreeOne"),
                         Error);
  }
  // A hand-built table where an eigenvalue ties the subdegree in absolute
  // value must fail the dominance check.
  EigenvalueTable tied;
  tied.n = 4;
  tied.subdegrees = {1, 3};
  tied.pairing = {0, 1};
  tied.columns.resize(2);
  tied.columns[0].multiplicity = 1;
  tied.columns[0].values = {qn(1), qn(3)};
  tied.columns[1].multiplicity = 3;
  tied.columns[1].values = {qn(1), qn(-3)};
  CHECK_FALSE(perron_frobenius_check(tied, 1));
}

TEST_CASE("serialized tables are stable") {
  Scheme s = scheme_of("psl25-line");
  EigenvalueTable t = eigentable(s.od, s.tensor);
  CHECK_EQ(eigentable_tsv(t),
           "n\t6\nsubdegrees\t1\t5\npairing\t0\t1\ncolumn\t1\t1\t5\ncolumn\t5\t1\t-1\n");
  CHECK_EQ(eigentable_json(t),
           "{\"n\":6,\"subdegrees\":[1,5],\"pairing\":[0,1],\"columns\":["
           "{\"multiplicity\":1,\"values\":[\"1\",\"5\"]},"
           "{\"multiplicity\":5,\"values\":[\"1\",\"-1\"]}]}");
}

TEST_CASE("amalgamating the non-commutative rank-6 fixture") {
  Scheme s = scheme_of("psl27-sylow2");
  REQUIRE_EQ(s.od.r, 6);
  // Pairing fixes 1, 2, 5 and swaps 3 ↔ 4.
  CHECK_EQ(s.od.pairing, std::vector<int>{0, 1, 2, 4, 3, 5});
  AdmissibleSet adm;
  adm.groups = {{1, 2}, {3, 4}, {5}};
  AmalgamatedScheme am = amalgamate(s.od, s.tensor, adm);
  CHECK_EQ(am.merged_subdegrees, std::vector<long long>{4, 8, 8});
  // No base eigentable exists, so no merged rows are reported.
  CHECK(am.merged_rows.empty());
}

TEST_CASE("amalgamation validates the partition") {
  Scheme s = scheme_of("psl27-sylow2");
  AdmissibleSet split_pair;
  split_pair.groups = {{1, 2, 3}, {4, 5}};
  CHECK_THROWS_WITH_AS(amalgamate(s.od, s.tensor, split_pair),
                       doctest::Contains("NotClosedUnderPairing"), Error);
  AdmissibleSet missing;
  missing.groups = {{1, 2}, {3, 4}};
  CHECK_THROWS_WITH_AS(amalgamate(s.od, s.tensor, missing), doctest::Contains("BadInput"),
                       Error);
  AdmissibleSet duplicated;
  duplicated.groups = {{1, 2}, {2, 3, 4}, {5}};
  CHECK_THROWS_WITH_AS(amalgamate(s.od, s.tensor, duplicated), doctest::Contains("BadInput"),
                       Error);
  AdmissibleSet with_diagonal;
  with_diagonal.groups = {{0, 1, 2}, {3, 4}, {5}};
  CHECK_THROWS_WITH_AS(amalgamate(s.od, s.tensor, with_diagonal), doctest::Contains("BadInput"),
                       Error);
  AdmissibleSet out_of_range;
  out_of_range.groups = {{1, 2}, {3, 4}, {5, 6}};
  CHECK_THROWS_WITH_AS(amalgamate(s.od, s.tensor, out_of_range), doctest::Contains("BadInput"),
                       Error);
}

TEST_CASE("amalgamated rows are column sums of the base table") {
  Scheme s = scheme_of("a6-pairs");
  AdmissibleSet whole;
  whole.groups = {{1, 2}};
  AmalgamatedScheme am = amalgamate(s.od, s.tensor, whole);
  CHECK_EQ(am.merged_subdegrees, std::vector<long long>{14});
  // Merging everything yields W − I: eigenvalues 14 (valency) and −1.
  REQUIRE_EQ(am.merged_rows.size(), 1);
  CHECK_EQ(am.merged_rows[0], std::vector<QuadraticNumber>{qn(14), qn(-1), qn(-1)});

  AdmissibleSet identity;
  identity.groups = {{1}, {2}};
  AmalgamatedScheme same = amalgamate(s.od, s.tensor, identity);
  CHECK_EQ(same.merged_subdegrees, std::vector<long long>{6, 8});
  EigenvalueTable base = eigentable(s.od, s.tensor);
  REQUIRE_EQ(same.merged_rows.size(), 2);
  for (int cls = 1; cls <= 2; ++cls)
    for (int l = 0; l < 3; ++l)
      CHECK_EQ(same.merged_rows[size_t(cls - 1)][size_t(l)],
               base.columns[size_t(l)].values[size_t(cls)]);
}
