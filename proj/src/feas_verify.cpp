#include <string>
#include <vector>

#include "orb/eigentable.hpp"
#include "orb/feasibility.hpp"

namespace orb {

namespace {

Rational R0(long long v) { return Rational(static_cast<long>(v)); }

// Complex conjugation of an exact value: Galois conjugation when the
// radicand is negative, the identity on real values.
Surd complex_conj(const Surd& v) { return v.is_real() ? v : v.conj(); }

std::string triple(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// Runs all exact identities; throws Error with a descriptive message on the
// first failure, which the wrapper converts into the check report.
FeasibilityCheck run_checks(const FeasibleParameters& fp) {
  const int r = static_cast<int>(fp.multiplicities.size());
  auto reject = [](const std::string& message) -> void { fail(ErrorCode::BadInput, message); };

  if (fp.p < 5 || !is_prime_ll(fp.p)) reject("p = " + std::to_string(fp.p) + " is not a prime >= 5");
  const long long n = 3 * fp.p;
  if (r < 2) reject("at least two eigen-columns are required");
  if (static_cast<int>(fp.subdegrees.size()) != r)
    reject("class count must equal column count in a commutative table");
  if (static_cast<int>(fp.rows.size()) != r - 1) reject("expected one row per non-trivial class");
  if (static_cast<int>(fp.pairing.size()) != r) reject("pairing must cover every class");
  if (fp.multiplicities[0] != 1) reject("the principal column must have multiplicity 1");
  if (fp.subdegrees[0] != 1) reject("class 0 must be the identity class of subdegree 1");

  long long fsum = 0, msum = 0;
  for (int c = 0; c < r; ++c) {
    if (fp.multiplicities[size_t(c)] < 1) reject("column multiplicities must be positive");
    fsum += fp.multiplicities[size_t(c)];
  }
  for (int i = 0; i < r; ++i) {
    if (fp.subdegrees[size_t(i)] < 1) reject("subdegrees must be positive");
    msum += fp.subdegrees[size_t(i)];
  }
  if (fsum != n) reject("column multiplicities sum to " + std::to_string(fsum) +
                        ", expected " + std::to_string(n));
  if (msum != n) reject("subdegrees sum to " + std::to_string(msum) + ", expected " +
                        std::to_string(n));
  for (int i = 1; i < r; ++i)
    if (fp.rows[size_t(i - 1)].subdegree != fp.subdegrees[size_t(i)])
      reject("row " + std::to_string(i) + " disagrees with the subdegree list");
  for (int i = 0; i < r; ++i) {
    int j = fp.pairing[size_t(i)];
    if (j < 0 || j >= r || fp.pairing[size_t(j)] != i)
      reject("pairing is not an involution at class " + std::to_string(i));
    if (fp.subdegrees[size_t(i)] != fp.subdegrees[size_t(j)])
      reject("paired classes " + std::to_string(i) + " and " + std::to_string(j) +
             " have different subdegrees");
  }
  if (fp.pairing[0] != 0) reject("class 0 must be self-paired");

  // Full eigenvalue matrix: theta[i][c] for class i on column c.
  std::vector<std::vector<Surd>> theta(static_cast<size_t>(r),
                                       std::vector<Surd>(static_cast<size_t>(r)));
  for (int c = 0; c < r; ++c) theta[0][size_t(c)] = Surd(1);
  for (int i = 1; i < r; ++i) {
    const ParameterRow& row = fp.rows[size_t(i - 1)];
    if (static_cast<int>(row.values.size()) != r - 1)
      reject("row " + std::to_string(i) + " must carry one value per non-principal column");
    theta[size_t(i)][0] = Surd(R0(fp.subdegrees[size_t(i)]));
    for (int c = 1; c < r; ++c) theta[size_t(i)][size_t(c)] = row.values[size_t(c - 1)];
  }

  // Surd columns must occur as conjugate pairs of equal multiplicity.
  for (int c = 1; c < r; ++c) {
    bool irrational = false;
    for (int i = 1; i < r && !irrational; ++i) irrational = !theta[size_t(i)][size_t(c)].is_rational();
    if (!irrational) continue;
    int partner = -1;
    for (int c2 = 1; c2 < r && partner == -1; ++c2) {
      if (c2 == c) continue;
      bool conj = true;
      for (int i = 1; i < r && conj; ++i)
        conj = theta[size_t(i)][size_t(c2)] == theta[size_t(i)][size_t(c)].conj();
      if (conj) partner = c2;
    }
    if (partner == -1) reject("surd column " + std::to_string(c) + " lacks a conjugate partner");
    if (fp.multiplicities[size_t(partner)] != fp.multiplicities[size_t(c)])
      reject("conjugate columns " + std::to_string(c) + " and " + std::to_string(partner) +
             " must share a multiplicity");
  }

  // Transposed classes carry complex-conjugate eigenvalues.
  for (int i = 1; i < r; ++i) {
    int istar = fp.pairing[size_t(i)];
    for (int c = 1; c < r; ++c)
      if (theta[size_t(istar)][size_t(c)] != complex_conj(theta[size_t(i)][size_t(c)]))
        reject("class " + std::to_string(istar) + " is not the transpose of class " +
               std::to_string(i) + " on column " + std::to_string(c));
  }

  // Row sums (trace of each basis matrix).
  for (int i = 1; i < r; ++i) {
    Surd sum(0);
    for (int c = 0; c < r; ++c)
      sum = sum.add(Surd(R0(fp.multiplicities[size_t(c)])).mul(theta[size_t(i)][size_t(c)]));
    if (!sum.is_zero()) reject("row " + std::to_string(i) + " has nonzero trace " + sum.str());
  }

  // Pair sums (trace of a product of two basis matrices).
  for (int i = 1; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Surd sum(0);
      for (int c = 0; c < r; ++c)
        sum = sum.add(Surd(R0(fp.multiplicities[size_t(c)]))
                          .mul(theta[size_t(i)][size_t(c)])
                          .mul(theta[size_t(j)][size_t(c)]));
      Surd expected(j == fp.pairing[size_t(i)] ? R0(n * fp.subdegrees[size_t(i)]) : Rational(0));
      if (sum != expected)
        reject("product trace of classes " + std::to_string(i) + "," + std::to_string(j) +
               " is " + sum.str() + ", expected " + expected.str());
    }

  // Column sums (eigenvalues of the all-ones matrix).
  for (int c = 1; c < r; ++c) {
    Surd sum(0);
    for (int i = 0; i < r; ++i) sum = sum.add(theta[size_t(i)][size_t(c)]);
    if (!sum.is_zero())
      reject("column " + std::to_string(c) + " sums to " + sum.str() + ", expected 0");
  }

  // Dual orthogonality fixes each multiplicity: sum_i |theta_ic|^2 / m_i = n / f_c.
  for (int c = 0; c < r; ++c) {
    Surd sum(0);
    for (int i = 0; i < r; ++i) {
      Surd sq = theta[size_t(i)][size_t(c)].mul(complex_conj(theta[size_t(i)][size_t(c)]));
      sum = sum.add(sq.mul(Surd(Rational(1) / R0(fp.subdegrees[size_t(i)]))));
    }
    if (sum != Surd(R0(n) / R0(fp.multiplicities[size_t(c)])))
      reject("column " + std::to_string(c) + " fails the multiplicity identity");
  }

  // Strict valency dominance for every non-trivial class.
  for (int i = 1; i < r; ++i) {
    if (fp.subdegrees[size_t(i)] < 2) continue;
    for (int c = 1; c < r; ++c)
      if (!theta[size_t(i)][size_t(c)].abs_less_than(R0(fp.subdegrees[size_t(i)])))
        reject("eigenvalue " + theta[size_t(i)][size_t(c)].str() + " of class " +
               std::to_string(i) + " is not dominated by the subdegree");
  }

  // Structure constants recovered by inversion; all must be non-negative
  // integers satisfying the counting identities.
  FeasibilityCheck check;
  check.rank = r;
  check.tensor.assign(size_t(r) * size_t(r) * size_t(r), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        int kstar = fp.pairing[size_t(k)];
        Surd sum(0);
        for (int c = 0; c < r; ++c)
          sum = sum.add(Surd(R0(fp.multiplicities[size_t(c)]))
                            .mul(theta[size_t(i)][size_t(c)])
                            .mul(theta[size_t(j)][size_t(c)])
                            .mul(theta[size_t(kstar)][size_t(c)]));
        if (!sum.is_rational())
          reject("structure constant " + triple(i, j, k) + " is irrational: " + sum.str());
        Rational value = sum.rat() / R0(n * fp.subdegrees[size_t(k)]);
        value.canonicalize();
        if (!is_integer(value) || value < 0)
          reject("structure constant " + triple(i, j, k) + " = " + to_string(value) +
                 " is not a non-negative integer");
        check.tensor[(size_t(i) * size_t(r) + size_t(j)) * size_t(r) + size_t(k)] =
            to_int64(value);
      }
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      if (check.at(0, j, k) != (j == k ? 1 : 0))
        reject("identity row of the tensor is wrong at " + triple(0, j, k));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long long target = j == fp.pairing[size_t(i)] ? fp.subdegrees[size_t(i)] : 0;
      if (check.at(i, j, 0) != target)
        reject("pairing column of the tensor is wrong at " + triple(i, j, 0));
      long long weighted = 0, plain = 0;
      for (int k = 0; k < r; ++k) {
        weighted += check.at(i, j, k) * fp.subdegrees[size_t(k)];
        plain += check.at(i, k, j);
      }
      if (weighted != fp.subdegrees[size_t(i)] * fp.subdegrees[size_t(j)])
        reject("path counts through classes " + std::to_string(i) + "," + std::to_string(j) +
               " do not total the subdegree product");
      if (plain != fp.subdegrees[size_t(i)])
        reject("row sums of the tensor slice at class " + std::to_string(i) + " are wrong");
    }

  check.ok = true;
  return check;
}

}  // namespace

FeasibilityCheck verify_parameters(const FeasibleParameters& params) {
  try {
    return run_checks(params);
  } catch (const Error& e) {
    FeasibilityCheck check;
    check.ok = false;
    check.first_failure = e.what();
    check.rank = static_cast<int>(params.multiplicities.size());
    return check;
  }
}

FeasibleParameters parameters_from_eigentable(const EigenvalueTable& table, TypeTag tag) {
  if (table.n % 3 != 0 || table.n / 3 < 5 || !is_prime_ll(table.n / 3))
    fail(ErrorCode::BadInput,
         "degree " + std::to_string(table.n) + " is not three times a prime >= 5");
  const int r = table.rank();
  FeasibleParameters fp;
  fp.tag = tag;
  fp.p = table.n / 3;
  for (const EigentableColumn& col : table.columns)
    fp.multiplicities.push_back(to_int64(col.multiplicity));
  fp.subdegrees = table.subdegrees;
  fp.pairing = table.pairing;
  for (int i = 1; i < r; ++i) {
    ParameterRow row;
    row.subdegree = table.subdegrees[size_t(i)];
    for (int c = 1; c < r; ++c) {
      const QuadraticNumber& q = table.columns[size_t(c)].values[size_t(i)];
      row.values.push_back(Surd(q.rat(), q.coeff(), to_int64(q.rad())));
    }
    fp.rows.push_back(std::move(row));
  }
  return fp;
}

}  // namespace orb
