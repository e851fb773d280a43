#include "orb/amalgam.hpp"

#include <algorithm>

namespace orb {

AmalgamatedScheme amalgamate(const OrbitalDecomposition& od, const IntersectionTensor& tensor,
                             const AdmissibleSet& admissible) {
  const int r = od.r;
  std::vector<int> owner(size_t(r), -1);
  AmalgamatedScheme out;
  out.groups = admissible.groups;
  for (size_t g = 0; g < out.groups.size(); ++g) {
    std::sort(out.groups[g].begin(), out.groups[g].end());
    if (out.groups[g].empty())
      fail(ErrorCode::BadInput, "empty group in the class partition");
    for (int cls : out.groups[g]) {
      if (cls < 1 || cls >= r)
        fail(ErrorCode::BadInput,
             "class " + std::to_string(cls) + " out of range in the partition");
      if (owner[size_t(cls)] != -1)
        fail(ErrorCode::BadInput, "class " + std::to_string(cls) + " assigned twice");
      owner[size_t(cls)] = static_cast<int>(g);
    }
  }
  for (int cls = 1; cls < r; ++cls)
    if (owner[size_t(cls)] == -1)
      fail(ErrorCode::BadInput, "class " + std::to_string(cls) + " missing from the partition");
  for (int cls = 1; cls < r; ++cls)
    if (owner[size_t(cls)] != owner[size_t(od.pairing[size_t(cls)])])
      fail(ErrorCode::NotClosedUnderPairing,
           "classes " + std::to_string(cls) + " and " + std::to_string(od.pairing[size_t(cls)]) +
               " are paired but split across groups");

  for (const std::vector<int>& group : out.groups) {
    long long m = 0;
    for (int cls : group) m += od.subdegrees[size_t(cls)];
    out.merged_subdegrees.push_back(m);
  }

  // Direct verification on the merged n×n matrices.
  std::vector<IntMatrix> merged;
  for (const std::vector<int>& group : out.groups) {
    IntMatrix a(od.n, od.n);
    for (int cls : group) a = a.add(basic_matrix(od, cls));
    merged.push_back(std::move(a));
  }
  for (size_t g = 0; g < merged.size(); ++g) {
    require_internal(merged[g].trace() == 0, "merged class touches the diagonal");
    require_internal(merged[g] == merged[g].transpose(), "merged class must be symmetric");
    for (size_t h = 0; h < merged.size(); ++h) {
      Int expect = g == h ? Int(long(od.n * out.merged_subdegrees[g])) : Int(0);
      require_internal(merged[g].mul(merged[h]).trace() == expect,
                       "merged trace identity tr(A_iA_j) = n·m_i·δ_ij failed");
    }
  }
  IntMatrix sum = IntMatrix::identity(od.n);
  for (const IntMatrix& a : merged) sum = sum.add(a);
  for (int i = 0; i < od.n; ++i)
    for (int j = 0; j < od.n; ++j)
      require_internal(sum.at(i, j) == 1, "merged classes plus I must tile the all-ones matrix");

  // Eigenvalue rows: columnwise sums of the base table, when it exists.
  try {
    EigenvalueTable base = eigentable(od, tensor);
    for (const std::vector<int>& group : out.groups) {
      std::vector<QuadraticNumber> row;
      row.reserve(base.columns.size());
      for (const EigentableColumn& col : base.columns) {
        QuadraticNumber s(0);
        for (int cls : group) s = s.add(col.values[size_t(cls)]);
        row.push_back(s);
      }
      out.merged_rows.push_back(std::move(row));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonCommutative) throw;
  }
  return out;
}

}  // namespace orb
