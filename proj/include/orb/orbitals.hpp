#pragma once

#include <vector>

#include "orb/group.hpp"

namespace orb {

// The orbit decomposition of Ω×Ω under a transitive group: a coloring of all
// ordered pairs, with class 0 the diagonal.  Classes are canonically ordered
// by (subdegree, then least witness column in row 0), so decompositions of
// isomorphic actions compare bit-for-bit.
struct OrbitalDecomposition {
  int n = 0;                          // degree
  int r = 0;                          // rank (number of classes)
  std::vector<int> color;             // row-major n×n: color of (α,β)
  std::vector<long long> subdegrees;  // n_i, one per class; n_0 = 1
  std::vector<int> pairing;           // class of the reversed pairs; involution

  int color_at(int a, int b) const { return color[size_t(a) * size_t(n) + size_t(b)]; }
};

// Computes the pair-orbit coloring by flooding Ω×Ω with the generators.
// Requires a transitive group (NotTransitive otherwise).
OrbitalDecomposition orbital_decomposition(const GroupData& g);

// Classical minimal-block-system test: true iff no nontrivial block system
// exists.  Serves as a check on the connectivity criterion computed
// independently from the pair coloring.
bool is_primitive_blocks(const GroupData& g);

}  // namespace orb
