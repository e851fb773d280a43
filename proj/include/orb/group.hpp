#pragma once

#include <vector>

#include "orb/permutation.hpp"

namespace orb {

// A permutation group given by generators, optionally with its element list
// populated by enumerate_group.  Once enumerated, the element list is sorted
// (lexicographically by image array) and treated as immutable.
struct GroupData {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  long long order = 0;

  bool enumerated() const { return !elements.empty(); }
};

inline constexpr long long kDefaultGroupCap = 100000;

// Validates generator degrees and wraps them in a GroupData (not enumerated).
GroupData make_group(int degree, std::vector<Permutation> generators);

// Breadth-first product closure of the generators.  The result carries the
// full sorted element list and the group order.  CapExceeded signals a group
// larger than intended for brute-force work (a misused fixture, typically).
GroupData enumerate_group(const GroupData& g, long long cap = kDefaultGroupCap);

// Membership in an enumerated group (binary search on the sorted list).
bool group_contains(const GroupData& g, const Permutation& p);
// Index of an element in the canonical (sorted) element list.
int element_index(const GroupData& g, const Permutation& p);

// Orbit of a point under the generators, in discovery order.
std::vector<int> point_orbit(const GroupData& g, int start);
bool is_transitive(const GroupData& g);

// |N(P) : P| for P generated by an element of order p, found by brute force
// over the enumerated element list.  Requires p to divide the order exactly
// once, so that P is determined up to conjugacy.
long long normalizer_index(const GroupData& g, long long p);

}  // namespace orb
