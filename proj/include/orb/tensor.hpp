#pragma once

#include <string>
#include <vector>

#include "orb/intmatrix.hpp"
#include "orb/orbitals.hpp"

namespace orb {

// Structure constants of the pair-orbit algebra: for any edge (α,β) of class
// k, a_{ijk} is the number of points γ with color(α,γ)=i and color(γ,β)=j —
// a triangle count, so every entry is a non-negative integer.
struct IntersectionTensor {
  int r = 0;
  std::vector<long long> a;  // r³ entries, index (i·r + j)·r + k

  long long at(int i, int j, int k) const {
    return a[(size_t(i) * size_t(r) + size_t(j)) * size_t(r) + size_t(k)];
  }
  long long& at(int i, int j, int k) {
    return a[(size_t(i) * size_t(r) + size_t(j)) * size_t(r) + size_t(k)];
  }
  bool commutative() const;  // a_{ijk} = a_{jik} for all triples
};

// Counts the tensor from one representative edge per class and cross-checks
// against an independent second edge (InconsistentRepresentatives on
// disagreement).  The combinatorial identities on the entries are verified
// before returning.
IntersectionTensor intersection_tensor(const OrbitalDecomposition& od);

// 0/1 adjacency matrix of one color class, n×n.
IntMatrix basic_matrix(const OrbitalDecomposition& od, int cls);

// Direct n×n verification of the trace identities linking adjacency matrices
// and the tensor: tr(B_i) = n·δ_{i0}, tr(B_i B_j) = n·n_i·δ_{j,i*}, and
// tr(B_i B_j B_{k*}) = n·n_k·a_{ijk}.  Failures are reported, not thrown.
struct TraceReport {
  bool pass = true;
  std::string first_failure;
};
TraceReport verify_trace_identities(const OrbitalDecomposition& od,
                                    const IntersectionTensor& tensor);

// The r×r matrices of the regular representation: matrix i has (j,k) entry
// a_{ijk}, and its eigenvalues are the class-i eigenvalues of the algebra.
std::vector<IntMatrix> regular_matrices(const IntersectionTensor& tensor);

// Connectivity criterion for primitivity: every nontrivial class, taken with
// both edge orientations, spans a connected graph.
bool connectivity_primitive(const OrbitalDecomposition& od);

}  // namespace orb
