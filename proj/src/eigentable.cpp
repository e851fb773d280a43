#include "orb/eigentable.hpp"

#include <algorithm>
#include <set>

#include "orb/polynomial.hpp"
#include "orb/rational.hpp"

namespace orb {
namespace {

IntPolynomial derivative_of(const IntPolynomial& f) {
  std::vector<Int> d;
  for (int k = 1; k <= f.degree(); ++k) d.push_back(f.coeff(k) * k);
  return IntPolynomial(std::move(d));
}

// Kernel vector of a singular r×r system over ℚ(√d), via Gauss–Jordan with
// exact surd arithmetic.  The kernel must be one-dimensional.
std::vector<QuadraticNumber> kernel_vector(std::vector<std::vector<QuadraticNumber>> a) {
  const int r = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < r && row < r; ++col) {
    int pr = -1;
    for (int i = row; i < r && pr == -1; ++i)
      if (!a[size_t(i)][size_t(col)].is_zero()) pr = i;
    if (pr == -1) continue;
    std::swap(a[size_t(row)], a[size_t(pr)]);
    QuadraticNumber inv = a[size_t(row)][size_t(col)].inverse();
    for (int k = col; k < r; ++k) a[size_t(row)][size_t(k)] = a[size_t(row)][size_t(k)].mul(inv);
    for (int i = 0; i < r; ++i) {
      if (i == row || a[size_t(i)][size_t(col)].is_zero()) continue;
      QuadraticNumber factor = a[size_t(i)][size_t(col)];
      for (int k = col; k < r; ++k)
        a[size_t(i)][size_t(k)] = a[size_t(i)][size_t(k)].sub(factor.mul(a[size_t(row)][size_t(k)]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  require_internal(row == r - 1, "eigenspace of a simple eigenvalue must be one-dimensional");
  std::vector<char> is_pivot(size_t(r), 0);
  for (int c : pivot_col) is_pivot[size_t(c)] = 1;
  int free_col = -1;
  for (int c = 0; c < r && free_col == -1; ++c)
    if (!is_pivot[size_t(c)]) free_col = c;
  std::vector<QuadraticNumber> x(size_t(r), QuadraticNumber(0));
  x[size_t(free_col)] = QuadraticNumber(1);
  for (int i = row - 1; i >= 0; --i) {
    QuadraticNumber s(0);
    for (int c = 0; c < r; ++c)
      if (c != pivot_col[size_t(i)] && !a[size_t(i)][size_t(c)].is_zero())
        s = s.add(a[size_t(i)][size_t(c)].mul(x[size_t(c)]));
    x[size_t(pivot_col[size_t(i)])] = s.neg();
  }
  return x;
}

// Exact rational solve of Σ_λ θ_{iλ}·f_λ = n·δ_{i0}: each surd equation is
// split into its rational and per-radicand components, giving an
// all-rational overdetermined system with a unique solution.
std::vector<Rational> solve_multiplicities(const std::vector<EigentableColumn>& columns,
                                           long long n) {
  const int r = static_cast<int>(columns.size());
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < r; ++i) {
    std::vector<Rational> rational_row(size_t(r) + 1, Rational(0));
    for (int l = 0; l < r; ++l) rational_row[size_t(l)] = columns[size_t(l)].values[size_t(i)].rat();
    rational_row[size_t(r)] = i == 0 ? Rational(long(n)) : Rational(0);
    rows.push_back(std::move(rational_row));
    std::set<Int> radicands;
    for (int l = 0; l < r; ++l) {
      const Int& d = columns[size_t(l)].values[size_t(i)].rad();
      if (d != 0) radicands.insert(d);
    }
    for (const Int& d : radicands) {
      std::vector<Rational> surd_row(size_t(r) + 1, Rational(0));
      for (int l = 0; l < r; ++l)
        if (columns[size_t(l)].values[size_t(i)].rad() == d)
          surd_row[size_t(l)] = columns[size_t(l)].values[size_t(i)].coeff();
      rows.push_back(std::move(surd_row));
    }
  }
  // Gauss–Jordan; every unknown must get a pivot.
  int rank = 0;
  std::vector<int> pivot_row(size_t(r), -1);
  for (int col = 0; col < r; ++col) {
    int pr = -1;
    for (int i = rank; i < static_cast<int>(rows.size()) && pr == -1; ++i)
      if (rows[size_t(i)][size_t(col)] != 0) pr = i;
    require_internal(pr != -1, "eigencolumns must be linearly independent");
    std::swap(rows[size_t(rank)], rows[size_t(pr)]);
    Rational inv = 1 / rows[size_t(rank)][size_t(col)];
    for (int k = col; k <= r; ++k) rows[size_t(rank)][size_t(k)] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[size_t(i)][size_t(col)] == 0) continue;
      Rational factor = rows[size_t(i)][size_t(col)];
      for (int k = col; k <= r; ++k)
        rows[size_t(i)][size_t(k)] -= factor * rows[size_t(rank)][size_t(k)];
    }
    pivot_row[size_t(col)] = rank;
    ++rank;
  }
  for (int i = rank; i < static_cast<int>(rows.size()); ++i)
    require_internal(rows[size_t(i)][size_t(r)] == 0, "inconsistent multiplicity system");
  std::vector<Rational> f(size_t(r), Rational(0));
  for (int col = 0; col < r; ++col) {
    f[size_t(col)] = rows[size_t(pivot_row[size_t(col)])][size_t(r)];
    f[size_t(col)].canonicalize();
  }
  return f;
}

bool all_rational(const EigentableColumn& c) {
  for (const QuadraticNumber& v : c.values)
    if (!v.is_rational()) return false;
  return true;
}

bool column_less(const EigentableColumn& x, const EigentableColumn& y) {
  bool xr = all_rational(x), yr = all_rational(y);
  if (xr != yr) return xr;  // rational columns first
  for (size_t i = 0; i < x.values.size(); ++i) {
    if (x.values[i] == y.values[i]) continue;
    return x.values[i].less_than(y.values[i]);
  }
  return false;
}

}  // namespace

EigenvalueTable eigentable(const OrbitalDecomposition& od, const IntersectionTensor& tensor) {
  if (!tensor.commutative())
    fail(ErrorCode::NonCommutative,
         "the pair-orbit algebra is non-commutative; only amalgamated data is available");
  const int r = tensor.r;
  std::vector<IntMatrix> regs = regular_matrices(tensor);

  // A separating integer combination M_t = Σ_i tⁱ·R_i: its charpoly must be
  // squarefree so that all joint eigenspaces split.  Small t always works.
  IntMatrix m;
  IntPolynomial cp;
  bool found = false;
  for (long t = 1; t <= 64 && !found; ++t) {
    IntMatrix cand(r, r);
    Int power(1);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) cand.at(j, k) += power * regs[size_t(i)].at(j, k);
      power *= t;
    }
    IntPolynomial candpoly = charpoly(cand);
    if (IntPolynomial::gcd(candpoly, derivative_of(candpoly)).degree() == 0) {
      m = std::move(cand);
      cp = std::move(candpoly);
      found = true;
    }
  }
  require_internal(found, "no separating combination of regular matrices found");

  std::vector<std::pair<QuadraticNumber, int>> roots = extract_roots(cp);
  require_internal(static_cast<int>(roots.size()) == r, "separating matrix must have r eigenvalues");

  EigenvalueTable table;
  table.n = od.n;
  table.subdegrees = od.subdegrees;
  table.pairing = od.pairing;
  for (const auto& [eta, mult] : roots) {
    require_internal(mult == 1, "separating eigenvalues must be simple");
    std::vector<std::vector<QuadraticNumber>> shifted(
        size_t(r), std::vector<QuadraticNumber>(size_t(r), QuadraticNumber(0)));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        Rational entry{m.at(j, k)};
        shifted[size_t(j)][size_t(k)] = QuadraticNumber(entry);
        if (j == k) shifted[size_t(j)][size_t(k)] = shifted[size_t(j)][size_t(k)].sub(eta);
      }
    std::vector<QuadraticNumber> u = kernel_vector(std::move(shifted));
    require_internal(!u[0].is_zero(), "eigencolumn must have a nonzero class-0 component");
    QuadraticNumber scale = u[0].inverse();
    EigentableColumn col;
    col.multiplicity = 0;
    col.values.reserve(size_t(r));
    for (int i = 0; i < r; ++i) col.values.push_back(u[size_t(i)].mul(scale));
    // Cross-check: the column really is a joint eigenvector, i.e. the class-i
    // eigenvalue reproduces R_i's action: Σ_k a_{ijk}·θ_k = θ_i·θ_j.
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        QuadraticNumber lhs(0);
        for (int k = 0; k < r; ++k)
          if (tensor.at(i, j, k) != 0)
            lhs = lhs.add(QuadraticNumber(Rational(long(tensor.at(i, j, k))))
                              .mul(col.values[size_t(k)]));
        require_internal(lhs == col.values[size_t(i)].mul(col.values[size_t(j)]),
                         "eigencolumn fails the structure-constant relation");
      }
    table.columns.push_back(std::move(col));
  }

  // Multiplicities from the linear system, required to be positive integers.
  std::vector<Rational> f = solve_multiplicities(table.columns, table.n);
  Int total(0);
  for (int l = 0; l < r; ++l) {
    if (!is_integer(f[size_t(l)]) || f[size_t(l)] <= 0)
      fail(ErrorCode::NonIntegerMultiplicity,
           "column multiplicity " + to_string(f[size_t(l)]) + " is not a positive integer");
    table.columns[size_t(l)].multiplicity = numerator(f[size_t(l)]);
    total += table.columns[size_t(l)].multiplicity;
  }
  require_internal(total == long(table.n), "multiplicities must sum to the degree");

  // The valency column goes first; the rest in canonical order.
  int valency = -1;
  for (int l = 0; l < r && valency == -1; ++l) {
    bool match = true;
    for (int i = 0; i < r && match; ++i)
      match = table.columns[size_t(l)].values[size_t(i)] ==
              QuadraticNumber(Rational(long(table.subdegrees[size_t(i)])));
    if (match) valency = l;
  }
  require_internal(valency != -1, "the valency column must appear in the spectrum");
  if (table.columns[size_t(valency)].multiplicity != 1)
    fail(ErrorCode::NonIntegerMultiplicity, "the valency column must have multiplicity 1");
  std::swap(table.columns[0], table.columns[size_t(valency)]);
  std::sort(table.columns.begin() + 1, table.columns.end(), column_less);

  // Surd columns must occur in conjugate pairs of equal multiplicity.
  for (const EigentableColumn& col : table.columns) {
    if (all_rational(col)) continue;
    bool matched = false;
    for (const EigentableColumn& other : table.columns) {
      bool conj = true;
      for (size_t i = 0; i < col.values.size() && conj; ++i)
        conj = other.values[i] == col.values[i].conj();
      if (conj) {
        require_internal(other.multiplicity == col.multiplicity,
                         "conjugate columns must share a multiplicity");
        matched = true;
        break;
      }
    }
    require_internal(matched, "surd column lacks its conjugate partner");
  }
  return table;
}

bool perron_frobenius_check(const EigenvalueTable& table, int cls) {
  require_internal(cls >= 0 && cls < table.rank(), "row index out of range");
  long m = long(table.subdegrees[size_t(cls)]);
  if (m <= 1)
    fail(ErrorCode::SubdegreeOne,
         "Perron–Frobenius domination is vacuous for subdegree " + std::to_string(m));
  QuadraticNumber bound{Rational(m)};
  int occurrences = 0;
  for (const EigentableColumn& col : table.columns)
    if (col.values[size_t(cls)] == bound) ++occurrences;
  if (occurrences != 1) return false;
  for (size_t l = 1; l < table.columns.size(); ++l) {
    const QuadraticNumber& theta = table.columns[l].values[size_t(cls)];
    if (theta == bound) continue;
    if (!theta.abs().less_than(bound)) return false;
  }
  return true;
}

std::string eigentable_tsv(const EigenvalueTable& table) {
  std::string out = "n\t" + std::to_string(table.n) + "\n";
  out += "subdegrees";
  for (long long m : table.subdegrees) out += "\t" + std::to_string(m);
  out += "\npairing";
  for (int p : table.pairing) out += "\t" + std::to_string(p);
  out += "\n";
  for (const EigentableColumn& col : table.columns) {
    out += "column\t" + to_string(col.multiplicity);
    for (const QuadraticNumber& v : col.values) out += "\t" + v.str();
    out += "\n";
  }
  return out;
}

std::string eigentable_json(const EigenvalueTable& table) {
  std::string out = "{\"n\":" + std::to_string(table.n) + ",\"subdegrees\":[";
  for (size_t i = 0; i < table.subdegrees.size(); ++i)
    out += (i ? "," : "") + std::to_string(table.subdegrees[i]);
  out += "],\"pairing\":[";
  for (size_t i = 0; i < table.pairing.size(); ++i)
    out += (i ? "," : "") + std::to_string(table.pairing[i]);
  out += "],\"columns\":[";
  for (size_t l = 0; l < table.columns.size(); ++l) {
    if (l) out += ",";
    out += "{\"multiplicity\":" + to_string(table.columns[l].multiplicity) + ",\"values\":[";
    for (size_t i = 0; i < table.columns[l].values.size(); ++i) {
      if (i) out += ",";
      out += "\"" + table.columns[l].values[i].str() + "\"";
    }
    out += "]}";
  }
  out += "]}";
  return out;
}

}  // namespace orb
