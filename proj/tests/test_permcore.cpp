#include "doctest.h"
#include "orb/group.hpp"
#include "orb/orbitals.hpp"
#include "orb/permutation.hpp"

using namespace orb;

namespace {

Permutation cyc(int degree, const std::string& cycles) {
  return Permutation::from_cycles(degree, cycles);
}

// A (n−1)-cycle together with an n-cycle or a 3-cycle: standard small
// generating sets for the symmetric and alternating groups.
GroupData sym(int n) {
  std::vector<int> rot(size_t(n), 0);
  for (int i = 0; i < n; ++i) rot[size_t(i)] = (i + 1) % n;
  return make_group(n, {Permutation(std::move(rot)), cyc(n, "(0 1)")});
}

GroupData alt(int n) {
  std::vector<Permutation> gens{cyc(n, "(0 1 2)")};
  std::vector<int> rot(size_t(n), 0);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) rot[size_t(i)] = (i + 1) % n;
  } else {
    rot[0] = 0;
    for (int i = 1; i < n; ++i) rot[size_t(i)] = i % (n - 1) + 1;
  }
  gens.push_back(Permutation(std::move(rot)));
  return make_group(n, std::move(gens));
}

}  // namespace

TEST_CASE("permutations validate their image arrays") {
  CHECK_NOTHROW(Permutation({1, 0, 2}));
  CHECK_THROWS_WITH_AS(Permutation({0, 0, 2}), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(Permutation({0, 3, 1}), doctest::Contains("BadInput"), Error);
  CHECK(Permutation::identity(4).is_identity());
  CHECK_EQ(Permutation::identity(0).degree(), 0);
}

TEST_CASE("cycle notation parses and prints") {
  Permutation p = cyc(5, "(0 1 2)(3 4)");
  CHECK_EQ(p.images(), std::vector<int>{1, 2, 0, 4, 3});
  CHECK_EQ(p.cycle_str(), "(0 1 2)(3 4)");
  CHECK_EQ(cyc(3, "()").cycle_str(), "()");
  CHECK_EQ(cyc(4, "(2 3)").images(), std::vector<int>{0, 1, 3, 2});
  // Malformed inputs: repeated point, out-of-range point, junk.
  CHECK_THROWS_WITH_AS(cyc(3, "(0 1 0)"), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(cyc(3, "(0 5)"), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(cyc(3, "(0 1"), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(cyc(3, "0 1"), doctest::Contains("BadInput"), Error);
}

TEST_CASE("composition is left-to-right") {
  // (0 1 2) then (0 1): 0→1→0, 1→2→2, 2→0→1, i.e. the transposition (1 2).
  Permutation p = cyc(3, "(0 1 2)");
  Permutation q = cyc(3, "(0 1)");
  CHECK_EQ(p.compose(q).images(), std::vector<int>{0, 2, 1});
  CHECK_EQ(q.compose(p).images(), std::vector<int>{2, 1, 0});  // the other order differs
  CHECK_EQ(p.compose(p.inverse()), Permutation::identity(3));
  CHECK_EQ(p.inverse().images(), std::vector<int>{2, 0, 1});
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK_EQ(cyc(5, "(0 1 2)(3 4)").order(), 6);
  CHECK_EQ(cyc(7, "(0 1 2 3 4 5 6)").order(), 7);
  CHECK_EQ(Permutation::identity(9).order(), 1);
  CHECK_EQ(cyc(9, "(0 1)(2 3 4)(5 6 7 8)").order(), 12);
}

TEST_CASE("group enumeration recovers classical orders") {
  CHECK_EQ(enumerate_group(sym(4)).order, 24);
  CHECK_EQ(enumerate_group(sym(5)).order, 120);
  CHECK_EQ(enumerate_group(alt(5)).order, 60);
  CHECK_EQ(enumerate_group(alt(6)).order, 360);
  CHECK_EQ(enumerate_group(alt(7)).order, 2520);
  GroupData c6 = enumerate_group(make_group(6, {cyc(6, "(0 1 2 3 4 5)")}));
  CHECK_EQ(c6.order, 6);
  CHECK_EQ(c6.elements.size(), 6);
}

TEST_CASE("the enumeration cap rejects oversized groups") {
  CHECK_THROWS_WITH_AS(enumerate_group(sym(5), 100), doctest::Contains("CapExceeded"), Error);
  CHECK_NOTHROW(enumerate_group(sym(5), 120));
}

TEST_CASE("membership and canonical indexing") {
  GroupData g = enumerate_group(sym(4));
  CHECK(group_contains(g, cyc(4, "(0 1 2 3)")));
  CHECK(group_contains(g, Permutation::identity(4)));
  // The identity has the lexicographically least image array.
  CHECK_EQ(element_index(g, Permutation::identity(4)), 0);
  for (int i = 0; i < 24; ++i) CHECK_EQ(element_index(g, g.elements[size_t(i)]), i);
  GroupData a4 = enumerate_group(make_group(4, {cyc(4, "(0 1 2)"), cyc(4, "(0 1)(2 3)")}));
  CHECK_EQ(a4.order, 12);
  CHECK_FALSE(group_contains(a4, cyc(4, "(0 1)")));
  CHECK_THROWS_WITH_AS(element_index(a4, cyc(4, "(0 1)")), doctest::Contains("NotFound"), Error);
}

TEST_CASE("orbits and transitivity") {
  GroupData g = make_group(5, {cyc(5, "(0 1)"), cyc(5, "(2 3 4)")});
  CHECK_EQ(point_orbit(g, 0), std::vector<int>{0, 1});
  CHECK_EQ(point_orbit(g, 4), std::vector<int>{4, 2, 3});
  CHECK_FALSE(is_transitive(g));
  CHECK(is_transitive(sym(5)));
  CHECK(is_transitive(make_group(1, {Permutation::identity(1)})));
}

TEST_CASE("normalizer index of a Sylow p-subgroup") {
  // |A6| = 360 = 2³·3²·5: the normalizer of a 5-Sylow has order 10.
  GroupData a6 = enumerate_group(alt(6));
  CHECK_EQ(normalizer_index(a6, 5), 2);
  // |S6| = 720: the same 5-Sylow picks up an extra inverting element.
  GroupData s6 = enumerate_group(sym(6));
  CHECK_EQ(normalizer_index(s6, 5), 4);
  // |S5| = 120: N(P) is the Frobenius group of order 20.
  CHECK_EQ(normalizer_index(enumerate_group(sym(5)), 5), 4);
  CHECK_EQ(normalizer_index(enumerate_group(alt(5)), 5), 2);
  // |A7| = 2520 = 2³·3²·5·7: N(P)/P for p = 7 has order 3.
  CHECK_EQ(normalizer_index(enumerate_group(alt(7)), 7), 3);
}

TEST_CASE("normalizer index rejects bad primes") {
  GroupData a6 = enumerate_group(alt(6));
  CHECK_THROWS_WITH_AS(normalizer_index(a6, 7), doctest::Contains("NoElementOfOrderP"), Error);
  CHECK_THROWS_WITH_AS(normalizer_index(a6, 3), doctest::Contains("PSquaredDividesOrder"),
                       Error);
  CHECK_THROWS_WITH_AS(normalizer_index(a6, 2), doctest::Contains("PSquaredDividesOrder"),
                       Error);
}

TEST_CASE("pair-orbit coloring of the natural symmetric action") {
  // S4 on 4 points is 2-transitive: rank 2, subdegrees 1 and 3.
  GroupData g = enumerate_group(sym(4));
  OrbitalDecomposition od = orbital_decomposition(g);
  CHECK_EQ(od.n, 4);
  CHECK_EQ(od.r, 2);
  CHECK_EQ(od.subdegrees, std::vector<long long>{1, 3});
  CHECK_EQ(od.pairing, std::vector<int>{0, 1});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK_EQ(od.color_at(a, b), a == b ? 0 : 1);
}

TEST_CASE("pair-orbit coloring of a regular cyclic action") {
  GroupData c5 = enumerate_group(make_group(5, {cyc(5, "(0 1 2 3 4)")}));
  OrbitalDecomposition od = orbital_decomposition(c5);
  CHECK_EQ(od.r, 5);
  CHECK_EQ(od.subdegrees, std::vector<long long>(5, 1));
  // Canonical order puts class i on the pairs (a, a+i mod 5); reversal negates.
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) CHECK_EQ(od.color_at(a, b), (b - a + 5) % 5);
  CHECK_EQ(od.pairing, std::vector<int>{0, 4, 3, 2, 1});
}

TEST_CASE("the diagonal is class 0 and classes are G-invariant") {
  GroupData g = enumerate_group(alt(5));
  OrbitalDecomposition od = orbital_decomposition(g);
  for (int a = 0; a < od.n; ++a) CHECK_EQ(od.color_at(a, a), 0);
  for (const Permutation& s : g.generators)
    for (int a = 0; a < od.n; ++a)
      for (int b = 0; b < od.n; ++b)
        CHECK_EQ(od.color_at(a, b), od.color_at(s.apply(a), s.apply(b)));
  // Subdegrees are row counts, identical for every row.
  std::vector<long long> counts(size_t(od.r), 0);
  for (int b = 0; b < od.n; ++b) ++counts[size_t(od.color_at(2, b))];
  CHECK_EQ(counts, od.subdegrees);
}

TEST_CASE("orbital decomposition requires transitivity") {
  GroupData g = make_group(4, {cyc(4, "(0 1)")});
  CHECK_THROWS_WITH_AS(orbital_decomposition(g), doctest::Contains("NotTransitive"), Error);
}

TEST_CASE("block-system primitivity on small actions") {
  CHECK(is_primitive_blocks(enumerate_group(sym(4))));
  CHECK(is_primitive_blocks(enumerate_group(make_group(5, {cyc(5, "(0 1 2 3 4)")}))));
  // C6 regular has the blocks {0,2,4}/{1,3,5} and {0,3}/{1,4}/{2,5}.
  CHECK_FALSE(is_primitive_blocks(enumerate_group(make_group(6, {cyc(6, "(0 1 2 3 4 5)")}))));
  // D4 on the square: the two diagonals form a block system.
  GroupData d4 = enumerate_group(make_group(4, {cyc(4, "(0 1 2 3)"), cyc(4, "(1 3)")}));
  CHECK_EQ(d4.order, 8);
  CHECK_FALSE(is_primitive_blocks(d4));
}
