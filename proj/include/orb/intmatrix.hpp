#pragma once

#include <vector>

#include "orb/polynomial.hpp"
#include "orb/rational.hpp"

namespace orb {

// Dense matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  IntMatrix mul(const IntMatrix& o) const;
  IntMatrix add(const IntMatrix& o) const;
  IntMatrix transpose() const;
  Int trace() const;

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// Exact characteristic polynomial det(xI − M) of a square matrix of dimension
// ≤ 8, via the Faddeev–LeVerrier recurrence (all divisions exact).
IntPolynomial charpoly(const IntMatrix& m);

}  // namespace orb
