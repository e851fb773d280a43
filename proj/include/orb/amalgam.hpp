#pragma once

#include <vector>

#include "orb/eigentable.hpp"

namespace orb {

// A partition of the nontrivial classes {1..r−1} into groups, each closed
// under the pairing involution.  Summing the adjacency matrices inside each
// group produces symmetric matrices whose trace identities still hold — the
// form in which the non-commutative rank-6 decompositions become tractable.
struct AdmissibleSet {
  std::vector<std::vector<int>> groups;
};

struct AmalgamatedScheme {
  std::vector<std::vector<int>> groups;      // validated partition, members sorted
  std::vector<long long> merged_subdegrees;  // per group: Σ of member subdegrees
  // Per group, the columnwise sum of member eigenvalue rows over the base
  // table's columns (column 0 = valency).  Left empty when the base algebra
  // is non-commutative and has no eigentable.
  std::vector<std::vector<QuadraticNumber>> merged_rows;
};

// Validates the partition (NotClosedUnderPairing), merges subdegrees and —
// when available — eigenvalue rows, and verifies tr(A_i) = 0,
// tr(A_i·A_j) = n·m_i·δ_{ij}, and Σ A_i = W − I by direct n×n arithmetic.
AmalgamatedScheme amalgamate(const OrbitalDecomposition& od, const IntersectionTensor& tensor,
                             const AdmissibleSet& admissible);

}  // namespace orb
