#pragma once

#include <string>
#include <vector>

#include "orb/group.hpp"

namespace orb {

// Expected invariants of a builtin group fixture, asserted by the test suite
// and by the CLI's verify command.
struct FixtureDescriptor {
  std::string name;
  int degree = 0;
  long long order = 0;
  int rank = 0;
  std::vector<long long> subdegrees;
  bool primitive = false;
  std::string golden;  // basename of the golden eigentable, empty if none
};

struct BuiltinFixture {
  FixtureDescriptor descriptor;
  GroupData group;  // enumerated
};

// The symmetric (or alternating) group of degree n acting on the n(n−1)/2
// unordered pairs, pairs indexed lexicographically.
GroupData pairs_action(int n, bool alternating);

// PSL(2,q) or PGL(2,q) on the q+1 points of the projective line over GF(q),
// points indexed 0..q−1 (field elements) and q (the point at infinity).
// Supports odd primes q ≤ 23; the enumerated order is verified against
// q(q²−1)/2 resp. q(q²−1).
GroupData psl2_line_action(int q, bool projective);

// Right-multiplication action on the right cosets of a subgroup, cosets
// indexed by their minimal element in the canonical element order.
GroupData coset_action(const GroupData& g, const std::vector<Permutation>& subgroup);

enum class SubgroupTarget { A5, Sylow2 };

// Deterministic subgroup search over an enumerated group.
//  - A5: one representative of every conjugacy class of order-60 subgroups,
//    found by closing (order-2, order-5) pairs whose product has order 3.
//  - Sylow2: the full family of Sylow 2-subgroups.
// Each subgroup is a sorted element list; the outer list is deterministic.
std::vector<std::vector<Permutation>> find_subgroup(const GroupData& g, SubgroupTarget target);

// Conjugation action of g on a family of subgroups (each given as an element
// list).  The family is canonically indexed by sorted element-index sets and
// must be closed under conjugation by the generators.
GroupData conjugation_action(const GroupData& g,
                             const std::vector<std::vector<Permutation>>& family);

// Builtin fixture registry.
const std::vector<std::string>& builtin_fixture_names();
BuiltinFixture build_fixture(const std::string& name);

// Group fixture JSON interchange: {"degree": n, "generators": [[images…],…]}.
std::string group_to_json(const GroupData& g);
GroupData group_from_json(const std::string& text);

}  // namespace orb
