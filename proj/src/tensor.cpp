#include "orb/tensor.hpp"

namespace orb {
namespace {

// a_{ij·} counts for a single edge (α,β), as an r×r slice.
std::vector<long long> count_slice(const OrbitalDecomposition& od, int alpha, int beta) {
  std::vector<long long> slice(size_t(od.r) * size_t(od.r), 0);
  for (int gamma = 0; gamma < od.n; ++gamma) {
    int i = od.color_at(alpha, gamma);
    int j = od.color_at(gamma, beta);
    ++slice[size_t(i) * size_t(od.r) + size_t(j)];
  }
  return slice;
}

void verify_tensor_identities(const OrbitalDecomposition& od, const IntersectionTensor& t) {
  const int r = t.r;
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      require_internal(t.at(0, j, k) == (j == k ? 1 : 0), "a_{0jk} must be delta_{jk}");
      require_internal(t.at(j, 0, k) == (j == k ? 1 : 0), "a_{j0k} must be delta_{jk}");
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long long expect = od.pairing[size_t(j)] == i ? od.subdegrees[size_t(i)] : 0;
      require_internal(t.at(i, j, 0) == expect, "a_{ij0} must be delta_{i,j*}·n_i");
      long long sum = 0;
      for (int k = 0; k < r; ++k) sum += t.at(i, j, k) * od.subdegrees[size_t(k)];
      require_internal(sum == od.subdegrees[size_t(i)] * od.subdegrees[size_t(j)],
                       "sum_k a_{ijk}·n_k must equal n_i·n_j");
      for (int k = 0; k < r; ++k)
        require_internal(
            od.subdegrees[size_t(k)] * t.at(i, j, k) ==
                od.subdegrees[size_t(i)] * t.at(k, od.pairing[size_t(j)], i),
            "triangle recount n_k·a_{ijk} = n_i·a_{k j* i} failed");
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          long long lhs = 0, rhs = 0;
          for (int v = 0; v < r; ++v) {
            lhs += t.at(i, j, v) * t.at(v, k, l);
            rhs += t.at(j, k, v) * t.at(i, v, l);
          }
          require_internal(lhs == rhs, "associativity of the structure constants failed");
        }
}

}  // namespace

bool IntersectionTensor::commutative() const {
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < r; ++k)
        if (at(i, j, k) != at(j, i, k)) return false;
  return true;
}

IntersectionTensor intersection_tensor(const OrbitalDecomposition& od) {
  IntersectionTensor t;
  t.r = od.r;
  t.a.assign(size_t(od.r) * size_t(od.r) * size_t(od.r), 0);
  for (int k = 0; k < od.r; ++k) {
    // Representative edge from row 0, cross-checked against an edge rooted at
    // a different point (G-invariance makes any two edges agree).
    int beta0 = -1, alpha1 = -1, beta1 = -1;
    for (int b = 0; b < od.n && beta0 == -1; ++b)
      if (od.color_at(0, b) == k) beta0 = b;
    require_internal(beta0 != -1, "every class must appear in row 0");
    for (int a = 1; a < od.n && alpha1 == -1; ++a)
      for (int b = 0; b < od.n; ++b)
        if (od.color_at(a, b) == k) {
          alpha1 = a;
          beta1 = b;
          break;
        }
    std::vector<long long> slice = count_slice(od, 0, beta0);
    if (alpha1 != -1) {
      std::vector<long long> check = count_slice(od, alpha1, beta1);
      for (int i = 0; i < od.r; ++i)
        for (int j = 0; j < od.r; ++j)
          if (slice[size_t(i) * size_t(od.r) + size_t(j)] !=
              check[size_t(i) * size_t(od.r) + size_t(j)])
            fail(ErrorCode::InconsistentRepresentatives,
                 "edge (" + std::to_string(alpha1) + "," + std::to_string(beta1) +
                     ") of class " + std::to_string(k) +
                     " disagrees with the row-0 representative at (i,j)=(" + std::to_string(i) +
                     "," + std::to_string(j) + ")");
    }
    for (int i = 0; i < od.r; ++i)
      for (int j = 0; j < od.r; ++j)
        t.at(i, j, k) = slice[size_t(i) * size_t(od.r) + size_t(j)];
  }
  verify_tensor_identities(od, t);
  return t;
}

IntMatrix basic_matrix(const OrbitalDecomposition& od, int cls) {
  IntMatrix b(od.n, od.n);
  for (int a = 0; a < od.n; ++a)
    for (int c = 0; c < od.n; ++c)
      if (od.color_at(a, c) == cls) b.at(a, c) = 1;
  return b;
}

TraceReport verify_trace_identities(const OrbitalDecomposition& od,
                                    const IntersectionTensor& tensor) {
  TraceReport report;
  auto flag = [&](const std::string& what) {
    if (report.pass) {
      report.pass = false;
      report.first_failure = what;
    }
  };
  const int r = od.r;
  const long n = od.n;
  std::vector<IntMatrix> basics;
  basics.reserve(size_t(r));
  for (int i = 0; i < r; ++i) basics.push_back(basic_matrix(od, i));

  for (int i = 0; i < r; ++i) {
    Int expect = i == 0 ? Int(n) : Int(0);
    if (basics[size_t(i)].trace() != expect) {
      flag("tr(B_" + std::to_string(i) + ")");
      return report;
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      IntMatrix product = basics[size_t(i)].mul(basics[size_t(j)]);
      Int expect = od.pairing[size_t(i)] == j ? Int(long(n * od.subdegrees[size_t(i)])) : Int(0);
      if (product.trace() != expect) {
        flag("tr(B_" + std::to_string(i) + "B_" + std::to_string(j) + ")");
        return report;
      }
      // One n² sweep gives tr(B_i·B_j·B_{k*}) for every k at once:
      // tr = Σ_{α,β} (B_iB_j)[α,β]·[color(β,α) = k*].
      std::vector<Int> by_class(size_t(r), Int(0));
      for (int a = 0; a < od.n; ++a)
        for (int b = 0; b < od.n; ++b) by_class[size_t(od.color_at(b, a))] += product.at(a, b);
      for (int k = 0; k < r; ++k) {
        Int want(long(n * od.subdegrees[size_t(k)] * tensor.at(i, j, k)));
        if (by_class[size_t(od.pairing[size_t(k)])] != want) {
          flag("tr(B_" + std::to_string(i) + "B_" + std::to_string(j) + "B_" +
               std::to_string(k) + "*) vs n·n_k·a_{ijk} at (i,j,k)=(" + std::to_string(i) + "," +
               std::to_string(j) + "," + std::to_string(k) + ")");
          return report;
        }
      }
    }
  // The classes partition Ω×Ω: Σ B_i is the all-ones matrix.
  IntMatrix sum(od.n, od.n);
  for (const IntMatrix& b : basics) sum = sum.add(b);
  for (int a = 0; a < od.n; ++a)
    for (int b = 0; b < od.n; ++b)
      if (sum.at(a, b) != 1) {
        flag("sum of basic matrices is not the all-ones matrix");
        return report;
      }
  return report;
}

std::vector<IntMatrix> regular_matrices(const IntersectionTensor& tensor) {
  std::vector<IntMatrix> out;
  out.reserve(size_t(tensor.r));
  for (int i = 0; i < tensor.r; ++i) {
    IntMatrix m(tensor.r, tensor.r);
    for (int j = 0; j < tensor.r; ++j)
      for (int k = 0; k < tensor.r; ++k) m.at(j, k) = long(tensor.at(i, j, k));
    out.push_back(std::move(m));
  }
  return out;
}

bool connectivity_primitive(const OrbitalDecomposition& od) {
  for (int cls = 1; cls < od.r; ++cls) {
    std::vector<char> seen(size_t(od.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < od.n; ++b) {
        if (seen[size_t(b)]) continue;
        if (od.color_at(a, b) == cls || od.color_at(b, a) == cls) {
          seen[size_t(b)] = 1;
          ++count;
          stack.push_back(b);
        }
      }
    }
    if (count != od.n) return false;
  }
  return true;
}

}  // namespace orb
