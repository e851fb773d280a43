#include <fstream>
#include <sstream>

#include "doctest.h"
#include "orb/eigentable.hpp"
#include "orb/fixtures.hpp"
#include "orb/orbitals.hpp"
#include "orb/tensor.hpp"

using namespace orb;

namespace {

std::string read_golden(const std::string& basename) {
  std::string path = std::string(ORB_GOLDEN_DIR) + "/" + basename + ".tsv";
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("every builtin fixture matches its descriptor") {
  for (const std::string& name : builtin_fixture_names()) {
    CAPTURE(name);
    BuiltinFixture f = build_fixture(name);
    CHECK_EQ(f.descriptor.name, name);
    CHECK_EQ(f.group.degree, f.descriptor.degree);
    CHECK_EQ(f.group.order, f.descriptor.order);
    OrbitalDecomposition od = orbital_decomposition(f.group);
    CHECK_EQ(od.r, f.descriptor.rank);
    CHECK_EQ(od.subdegrees, f.descriptor.subdegrees);
    // Primitivity decided two independent ways: block systems on the group,
    // connectivity on the pair coloring.
    CHECK_EQ(is_primitive_blocks(f.group), f.descriptor.primitive);
    CHECK_EQ(connectivity_primitive(od), f.descriptor.primitive);
  }
}

TEST_CASE("fixtures with a golden table reproduce it byte for byte") {
  for (const std::string& name : builtin_fixture_names()) {
    BuiltinFixture f = build_fixture(name);
    if (f.descriptor.golden.empty()) continue;
    CAPTURE(name);
    OrbitalDecomposition od = orbital_decomposition(f.group);
    EigenvalueTable table = eigentable(od, intersection_tensor(od));
    CHECK_EQ(eigentable_tsv(table), read_golden(f.descriptor.golden));
  }
}

TEST_CASE("pairs action indexes unordered pairs lexicographically") {
  GroupData g = pairs_action(5, false);
  CHECK_EQ(g.degree, 10);
  GroupData e = enumerate_group(g);
  CHECK_EQ(e.order, 120);
  // The transposition (0 1) of the underlying 5 points fixes pair {0,1} —
  // index 0 — and swaps {0,2}↔{1,2} (indices 1 and 4).
  bool found = false;
  for (const Permutation& p : g.generators)
    if (p.apply(0) == 0 && p.apply(1) == 4 && p.apply(4) == 1) found = true;
  CHECK_MESSAGE(found, "expected the point-transposition generator acting on pairs");
  CHECK_EQ(enumerate_group(pairs_action(5, true)).order, 60);
}

TEST_CASE("projective line actions have the classical orders") {
  CHECK_EQ(psl2_line_action(5, false).degree, 6);
  CHECK_EQ(enumerate_group(psl2_line_action(5, false)).order, 60);
  CHECK_EQ(enumerate_group(psl2_line_action(7, false)).order, 168);
  CHECK_EQ(enumerate_group(psl2_line_action(7, true)).order, 336);
  CHECK_EQ(enumerate_group(psl2_line_action(11, false)).order, 660);
  CHECK_EQ(enumerate_group(psl2_line_action(13, true)).order, 2184);
  // Both are 2-transitive on the line, hence rank 2.
  OrbitalDecomposition od = orbital_decomposition(enumerate_group(psl2_line_action(11, false)));
  CHECK_EQ(od.r, 2);
}

TEST_CASE("projective line actions reject unsupported fields") {
  CHECK_THROWS_WITH_AS(psl2_line_action(2, false), doctest::Contains("UnsupportedField"), Error);
  CHECK_THROWS_WITH_AS(psl2_line_action(9, false), doctest::Contains("UnsupportedField"), Error);
  CHECK_THROWS_WITH_AS(psl2_line_action(29, false), doctest::Contains("UnsupportedField"),
                       Error);
}

TEST_CASE("Sylow 2-subgroup families") {
  GroupData pgl = enumerate_group(psl2_line_action(7, true));
  std::vector<std::vector<Permutation>> syl = find_subgroup(pgl, SubgroupTarget::Sylow2);
  // |PGL(2,7)| = 336 = 2⁴·21 and the Sylow 2-subgroups are self-normalizing.
  CHECK_EQ(syl.size(), 21);
  for (const auto& s : syl) CHECK_EQ(s.size(), 16);
  GroupData psl = enumerate_group(psl2_line_action(7, false));
  std::vector<std::vector<Permutation>> syl8 = find_subgroup(psl, SubgroupTarget::Sylow2);
  CHECK_EQ(syl8.size(), 21);
  for (const auto& s : syl8) CHECK_EQ(s.size(), 8);
}

TEST_CASE("order-60 subgroup class representatives") {
  GroupData psl = enumerate_group(psl2_line_action(19, false));
  std::vector<std::vector<Permutation>> classes = find_subgroup(psl, SubgroupTarget::A5);
  CHECK_EQ(classes.size(), 2);
  for (const auto& c : classes) CHECK_EQ(c.size(), 60);
  // The two classes are genuinely different subgroups.
  CHECK_NE(classes[0], classes[1]);
}

TEST_CASE("conjugation action rejects families that are not closed") {
  GroupData pgl = enumerate_group(psl2_line_action(7, true));
  std::vector<std::vector<Permutation>> syl = find_subgroup(pgl, SubgroupTarget::Sylow2);
  std::vector<std::vector<Permutation>> partial{syl[0]};
  CHECK_THROWS_WITH_AS(conjugation_action(pgl, partial), doctest::Contains("NotClosed"), Error);
}

TEST_CASE("coset action on a small explicit subgroup") {
  // S4 acting on the cosets of S3 = ⟨(1 2), (2 3)⟩ is the natural action on
  // 4 points in disguise: degree 4, transitive, 2-transitive.
  GroupData s4 = enumerate_group(
      make_group(4, {Permutation::from_cycles(4, "(0 1 2 3)"), Permutation::from_cycles(4, "(0 1)")}));
  std::vector<Permutation> s3;
  for (const Permutation& p : s4.elements)
    if (p.apply(0) == 0) s3.push_back(p);
  CHECK_EQ(s3.size(), 6);
  GroupData act = coset_action(s4, s3);
  CHECK_EQ(act.degree, 4);
  GroupData e = enumerate_group(act);
  CHECK_EQ(e.order, 24);
  CHECK_EQ(orbital_decomposition(e).r, 2);
}

TEST_CASE("the two coset fixtures are similar actions") {
  // Two conjugacy classes of order-60 subgroups give two coset actions with
  // identical combinatorial invariants (they are interchanged by an outer
  // automorphism): same subdegrees, same tensor, same table.
  BuiltinFixture a = build_fixture("psl219-a5cosets");
  BuiltinFixture b = build_fixture("psl219-a5cosets-alt");
  OrbitalDecomposition oa = orbital_decomposition(a.group);
  OrbitalDecomposition ob = orbital_decomposition(b.group);
  CHECK_EQ(oa.subdegrees, ob.subdegrees);
  IntersectionTensor ta = intersection_tensor(oa);
  IntersectionTensor tb = intersection_tensor(ob);
  CHECK_EQ(ta.a, tb.a);
  CHECK_EQ(eigentable_tsv(eigentable(oa, ta)), eigentable_tsv(eigentable(ob, tb)));
}

TEST_CASE("group JSON round-trips") {
  GroupData g = psl2_line_action(7, true);
  GroupData back = group_from_json(group_to_json(g));
  CHECK_EQ(back.degree, g.degree);
  REQUIRE_EQ(back.generators.size(), g.generators.size());
  for (size_t i = 0; i < g.generators.size(); ++i)
    CHECK_EQ(back.generators[i], g.generators[i]);
  CHECK_THROWS_WITH_AS(group_from_json("{\"degree\": 3}"), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(group_from_json("not json"), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(group_from_json("{\"degree\": 3, \"generators\": [[0, 0, 1]]}"),
                       doctest::Contains("BadInput"), Error);
}

TEST_CASE("unknown fixture names are rejected") {
  CHECK_THROWS_WITH_AS(build_fixture("no-such-fixture"), doctest::Contains("NotFound"), Error);
}
