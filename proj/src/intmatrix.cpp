#include "orb/intmatrix.hpp"

namespace orb {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  require_internal(cols_ == o.rows_, "matrix product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::add(const IntMatrix& o) const {
  require_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Int IntMatrix::trace() const {
  require_internal(rows_ == cols_, "trace of a non-square matrix");
  Int t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

IntPolynomial charpoly(const IntMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorCode::NotSquare, "characteristic polynomial requires a square matrix, got " +
                                   std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  int n = m.rows();
  if (n > 8)
    fail(ErrorCode::BadInput, "characteristic polynomial limited to dimension 8, got " +
                                  std::to_string(n));
  std::vector<Int> coeffs(size_t(n) + 1, 0);
  coeffs[size_t(n)] = 1;
  if (n == 0) return IntPolynomial(std::move(coeffs));
  // Faddeev–LeVerrier: M₁ = M, c_k = −tr(M_k)/k, M_{k+1} = M(M_k + c_k·I).
  IntMatrix mk = m;
  Int ck = -mk.trace();
  coeffs[size_t(n) - 1] = ck;
  for (int k = 2; k <= n; ++k) {
    IntMatrix shifted = mk;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
    mk = m.mul(shifted);
    Int t = mk.trace();
    require_internal(mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(k)) != 0,
                     "trace division in the characteristic-polynomial recurrence must be exact");
    ck = -t / k;
    coeffs[size_t(n - k)] = ck;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace orb
