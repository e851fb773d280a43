#pragma once

#include <string>
#include <vector>

#include "orb/quadratic.hpp"
#include "orb/tensor.hpp"

namespace orb {

// One simultaneous eigenspace of the (commutative) pair-orbit algebra: its
// dimension f and the eigenvalue of every class on it.
struct EigentableColumn {
  Int multiplicity;                      // f_λ, a positive integer
  std::vector<QuadraticNumber> values;   // θ_{iλ} for class i = 0..r−1; θ_{0λ} = 1
};

// The exact eigenvalue/multiplicity table of a commutative decomposition.
// Column 0 is always the valency column (θ_{i0} = m_i, f = 1); the remaining
// columns are ordered canonically: all-rational columns first, then surd
// columns, each block sorted lexicographically by exact value.
struct EigenvalueTable {
  long long n = 0;
  std::vector<long long> subdegrees;  // m_i, i = 0..r−1 (m_0 = 1)
  std::vector<int> pairing;
  std::vector<EigentableColumn> columns;

  int rank() const { return static_cast<int>(subdegrees.size()); }
};

// Computes the table from the regular representation: eigenvalues via exact
// characteristic polynomials, column assembly via shared eigenvectors over
// the quadratic field, multiplicities from the linear relations
// Σ_λ f_λ·θ_{iλ} = n·δ_{i0} solved exactly.  Rejects non-commutative tensors
// (NonCommutative) and schemes whose multiplicities fail to be positive
// integers (NonIntegerMultiplicity).
EigenvalueTable eigentable(const OrbitalDecomposition& od, const IntersectionTensor& tensor);

// True iff in row `cls` the subdegree appears in exactly one column and every
// other eigenvalue is strictly smaller in absolute value — decided by exact
// surd comparison.  Rows of subdegree 1 are rejected (SubdegreeOne).
bool perron_frobenius_check(const EigenvalueTable& table, int cls);

// Frozen text forms; surds appear in the canonical "x+y*sqrt(d)" rendering.
std::string eigentable_tsv(const EigenvalueTable& table);
std::string eigentable_json(const EigenvalueTable& table);

}  // namespace orb
