// Independent brute-force search for parameter tables of a commutative
// decomposition pattern.  Nothing here knows the closed-form families: rows
// are enumerated directly from the elementary trace identities
//
//   tr(B)      = 0        →  m + Σ f_c·θ_c           = 0
//   tr(B·Bᵀ)   = n·m      →  m² + Σ f_c·|θ_c|²       = 3p·m
//   tr(B²)     = n·m·δ    →  m² + Σ f_c·θ_c²         = 3p·m  (self-paired)
//                             m² + Σ f_c·θ_c²         = 0     (transposed)
//
// then assembled into complete tables (last row fixed by column sums) and
// accepted only if the full identity verifier passes.  Agreement with the
// closed-form solvers is therefore a genuine two-route cross-check.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orb/errors.hpp"
#include "orb/feasibility.hpp"
#include "orb/rational.hpp"

namespace orb {

namespace {

Rational RQ(long long v) { return Rational(static_cast<long>(v)); }

long long isqrt_ll(long long v) {
  if (v < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Largest |t| with f·t² ≤ rem and |t| ≤ m (−1 when rem < 0).
long long bound_for(long long f, long long rem, long long m) {
  if (rem < 0) return -1;
  return std::min(m, isqrt_ll(rem / f));
}

// Column layout of a commutative pattern at a concrete prime.
struct Shape {
  long long p = 0;
  long long n = 0;           // 3p
  int r = 0;                 // rank = eigen-column count = class count + 1
  std::vector<long long> f;  // column multiplicities, f[0] = 1
  int pairA = 0, pairB = 0;  // the equal-multiplicity column pair, if any
  std::vector<int> uniq;     // non-principal columns of unique multiplicity

  bool has_pair() const { return pairA != 0; }
};

Shape make_shape(long long p, const CaseType& pattern) {
  Shape s;
  s.p = p;
  s.n = 3 * p;
  s.r = pattern.rank;
  s.f.assign(1, 1);
  for (const Constituent& c : pattern.constituents) {
    const Rational deg = c.degree.eval(p);
    require_internal(is_integer(deg) && sgn(numerator(deg)) > 0,
                     "oracle_search: constituent degree not a positive integer");
    s.f.push_back(to_int64(numerator(deg)));
  }
  require_internal(static_cast<int>(s.f.size()) == s.r,
                   "oracle_search: rank does not match the constituent count");
  long long fsum = 0;
  for (long long v : s.f) fsum += v;
  require_internal(fsum == s.n, "oracle_search: multiplicities do not sum to 3p");
  for (int c = 1; c < s.r; ++c) {
    for (int e = c + 1; e < s.r; ++e) {
      if (s.f[c] == s.f[e]) {
        require_internal(!s.has_pair(), "oracle_search: more than one shared multiplicity");
        s.pairA = c;
        s.pairB = e;
      }
    }
  }
  for (int c = 1; c < s.r; ++c) {
    if (c != s.pairA && c != s.pairB) s.uniq.push_back(c);
  }
  // The surd generators support one rational column beside the shared pair;
  // shapes without a shared pair are purely rational and need no such limit.
  require_internal(!s.has_pair() || s.uniq.size() <= 1,
                   "oracle_search: unsupported column layout");
  return s;
}

// One class row: values on columns 1..r−1, in column order.
using RowVals = std::vector<Surd>;

// 0 for a fully rational row, else the radicand of its surd entries.
long long row_rad(const RowVals& row) {
  for (const Surd& v : row) {
    if (!v.is_rational()) return v.rad();
  }
  return 0;
}

RowVals conj_row(const RowVals& row) {
  RowVals out;
  out.reserve(row.size());
  for (const Surd& v : row) out.push_back(v.conj());
  return out;
}

// Swap the values on the paired columns — the other choice of which column
// receives the +√d branch.
RowVals swap_pair(const Shape& s, const RowVals& row) {
  RowVals out = row;
  std::swap(out[s.pairA - 1], out[s.pairB - 1]);
  return out;
}

// The final row of a table is not searched: column sums force
// θ_last = −1 − Σ θ_above in every column.
RowVals forced_row(const Shape& s, const std::vector<const RowVals*>& given) {
  RowVals out(static_cast<size_t>(s.r - 1), Surd(static_cast<long>(-1)));
  for (const RowVals* row : given) {
    for (int j = 0; j < s.r - 1; ++j) out[j] = out[j].sub((*row)[j]);
  }
  return out;
}

// --------------------------------------------------------------------------
// Per-valency row candidates.
// --------------------------------------------------------------------------

// Self-paired rows with every eigenvalue a rational integer.  The last
// column is solved from the trace; the norm identity is then checked.
std::vector<RowVals> gen_self_rational(const Shape& s, long long m) {
  std::vector<RowVals> out;
  const long long budget = 3 * s.p * m - m * m;  // Σ f_c·θ_c² must equal this
  if (budget < 0) return out;
  const int k = s.r - 1;
  require_internal(k == 2 || k == 3, "oracle_search: unsupported rank");
  const long long f_last = s.f[k];
  auto finish = [&](std::vector<long long> head, long long lin, long long quad) {
    if (lin % f_last != 0) return;
    const long long t = -(lin / f_last);
    if (t < -m || t > m) return;
    if (quad + f_last * t * t != budget) return;
    RowVals row;
    for (long long h : head) row.push_back(Surd(static_cast<long>(h)));
    row.push_back(Surd(static_cast<long>(t)));
    out.push_back(std::move(row));
  };
  const long long f1 = s.f[1];
  const long long b1 = bound_for(f1, budget, m);
  for (long long t1 = -b1; t1 <= b1; ++t1) {
    if (k == 2) {
      finish({t1}, m + f1 * t1, f1 * t1 * t1);
    } else {
      const long long f2 = s.f[2];
      const long long q1 = f1 * t1 * t1;
      const long long b2 = bound_for(f2, budget - q1, m);
      for (long long t2 = -b2; t2 <= b2; ++t2) {
        finish({t1, t2}, m + f1 * t1 + f2 * t2, q1 + f2 * t2 * t2);
      }
    }
  }
  return out;
}

// Self-paired rows carrying a real conjugate surd pair u ± v·√d on the
// shared-multiplicity columns.  S = 2u and q = u²−v²·d are rational integers
// (that is exactly algebraic integrality); the trace solves S, the norm
// solves q, and the discriminant S²−4q = (2v)²·d identifies d.  Square
// discriminants are skipped — those rows are rational and belong to
// gen_self_rational.
std::vector<RowVals> gen_self_surd(const Shape& s, long long m) {
  std::vector<RowVals> out;
  const long long budget = 3 * s.p * m - m * m;
  if (budget < 0 || !s.has_pair()) return out;
  const long long fP = s.f[s.pairA];
  const bool hasU = !s.uniq.empty();
  const long long fU = hasU ? s.f[s.uniq[0]] : 1;
  const long long bU = hasU ? bound_for(fU, budget, m) : 0;
  for (long long tU = -bU; tU <= bU; ++tU) {
    const long long lin = m + (hasU ? fU * tU : 0);
    const long long quadU = hasU ? fU * tU * tU : 0;
    if (lin % fP != 0) continue;
    const long long S = -(lin / fP);
    const long long rem = budget - quadU;  // = fP·(S²−2q)
    if (rem % fP != 0) continue;
    const long long sumsq = rem / fP;
    if ((S * S - sumsq) % 2 != 0) continue;
    const long long q = (S * S - sumsq) / 2;
    const long long disc = S * S - 4 * q;
    if (disc <= 0) continue;  // complex values cannot sit on a self-paired row
    long long rt = 0;
    if (perfect_square_ll(disc, rt)) continue;
    Int sf, root;
    squarefree_decompose(Int(static_cast<long>(disc)), sf, root);
    const long long d = to_int64(sf);
    const long long C = to_int64(root);
    RowVals row(static_cast<size_t>(s.r - 1));
    row[s.pairA - 1] = Surd(RQ(S) / RQ(2), RQ(C) / RQ(2), d);
    row[s.pairB - 1] = Surd(RQ(S) / RQ(2), RQ(-C) / RQ(2), d);
    if (hasU) row[s.uniq[0] - 1] = Surd(static_cast<long>(tU));
    out.push_back(std::move(row));
  }
  return out;
}

// Rows for one member of a transposed class pair.  tr(B²) = 0 cannot hold
// with a real spectrum, so the shared-multiplicity columns must carry a
// complex conjugate pair z, z̄ (radicand < 0) while unique columns stay
// rational; S = z + z̄ comes from the trace, q = |z|² from the norm, and
// tr(B²) = 0 is then checked exactly.
std::vector<RowVals> gen_paired_surd(const Shape& s, long long m) {
  std::vector<RowVals> out;
  const long long budget = 3 * s.p * m - m * m;
  if (budget < 0 || !s.has_pair()) return out;
  const long long fP = s.f[s.pairA];
  const bool hasU = !s.uniq.empty();
  const long long fU = hasU ? s.f[s.uniq[0]] : 1;
  const long long bU = hasU ? bound_for(fU, budget, m) : 0;
  for (long long tU = -bU; tU <= bU; ++tU) {
    const long long lin = m + (hasU ? fU * tU : 0);
    const long long quadU = hasU ? fU * tU * tU : 0;
    if (lin % fP != 0) continue;
    const long long S = -(lin / fP);
    const long long rem = budget - quadU;  // = 2·fP·q
    if (rem % (2 * fP) != 0) continue;
    const long long q = rem / (2 * fP);
    if (q < 0) continue;
    if (m * m + quadU + fP * (S * S - 2 * q) != 0) continue;
    const long long disc = S * S - 4 * q;
    if (disc >= 0) continue;
    Int sf, root;
    squarefree_decompose(Int(static_cast<long>(-disc)), sf, root);
    const long long d = -to_int64(sf);
    const long long C = to_int64(root);
    RowVals row(static_cast<size_t>(s.r - 1));
    row[s.pairA - 1] = Surd(RQ(S) / RQ(2), RQ(C) / RQ(2), d);
    row[s.pairB - 1] = Surd(RQ(S) / RQ(2), RQ(-C) / RQ(2), d);
    if (hasU) row[s.uniq[0] - 1] = Surd(static_cast<long>(tU));
    out.push_back(std::move(row));
  }
  return out;
}

// --------------------------------------------------------------------------
// Assembly: complete tables from candidate rows, verified exactly.
// --------------------------------------------------------------------------

void try_table(const Shape& s, TypeTag tag, const std::vector<long long>& sub,
               const std::vector<int>& pairing, const std::vector<RowVals>& rows,
               std::vector<FeasibleParameters>& out) {
  // All surd entries of one table must share a radicand.
  long long d = 0;
  for (const RowVals& row : rows) {
    for (const Surd& v : row) {
      if (v.is_rational()) continue;
      if (d != 0 && v.rad() != d) return;
      d = v.rad();
    }
  }
  // The pattern with two shared-degree constituents has a fixed conjugation
  // behaviour: the pair is swapped by complex conjugation exactly when
  // p ≡ 3 (mod 4) and fixed (all values real) when p ≡ 1 (mod 4).
  if (tag == TypeTag::I) {
    bool complex_seen = false;
    for (const RowVals& row : rows) {
      for (const Surd& v : row) {
        if (!v.is_real()) complex_seen = true;
      }
    }
    if (complex_seen != (s.p % 4 == 3)) return;
  }
  FeasibleParameters fp;
  fp.tag = tag;
  fp.p = s.p;
  fp.multiplicities = s.f;
  fp.subdegrees.push_back(1);
  for (long long m : sub) fp.subdegrees.push_back(m);
  fp.pairing = pairing;
  for (size_t i = 0; i < rows.size(); ++i) {
    ParameterRow row;
    row.subdegree = sub[i];
    row.values = rows[i];
    fp.rows.push_back(std::move(row));
  }
  if (!verify_parameters(fp).ok) return;
  out.push_back(std::move(fp));
}

// Valency floor for non-principal classes.  A class of valency 1 gives a
// non-trivial permutation commuting with the whole action, and its cycles are
// blocks; a class of valency 2 at odd composite degree likewise forces a
// block decomposition along its cycles.  Either way the action would be
// imprimitive, so the search starts at valency 3.
constexpr long long kMinValency = 3;

void assemble_rank3(const Shape& s, TypeTag tag, std::vector<FeasibleParameters>& out) {
  const long long total = s.n - 1;
  for (long long m1 = kMinValency; 2 * m1 <= total; ++m1) {
    const long long m2 = total - m1;
    // Both classes self-paired; second row fixed by column sums.
    for (const RowVals& r1 : gen_self_rational(s, m1)) {
      try_table(s, tag, {m1, m2}, {0, 1, 2}, {r1, forced_row(s, {&r1})}, out);
    }
    if (!s.has_pair()) continue;  // no equal multiplicities → no surd columns
    for (const RowVals& r1 : gen_self_surd(s, m1)) {
      try_table(s, tag, {m1, m2}, {0, 1, 2}, {r1, forced_row(s, {&r1})}, out);
    }
    // Transposed pair: equal subdegrees, complex conjugate rows.  (With all
    // columns rational tr(B²) = 0 is a sum of positives — nothing to try.)
    if (m1 == m2) {
      for (const RowVals& r1 : gen_paired_surd(s, m1)) {
        try_table(s, tag, {m1, m2}, {0, 2, 1}, {r1, conj_row(r1)}, out);
      }
    }
  }
}

void assemble_rank4(const Shape& s, TypeTag tag, std::vector<FeasibleParameters>& out) {
  const long long total = s.n - 1;
  std::vector<std::vector<RowVals>> selfrat(static_cast<size_t>(total) + 1);
  std::vector<std::vector<RowVals>> selfsurd(static_cast<size_t>(total) + 1);
  std::vector<std::vector<RowVals>> paired(static_cast<size_t>(total) + 1);
  std::vector<std::vector<RowVals>> eqrat(static_cast<size_t>(total) + 1);
  for (long long m = kMinValency; m + 2 <= total; ++m) {
    selfrat[m] = gen_self_rational(s, m);
    if (!s.has_pair()) continue;
    selfsurd[m] = gen_self_surd(s, m);
    paired[m] = gen_paired_surd(s, m);
    // Rational rows that can sit inside a surd column pair: such columns are
    // exchanged by conjugation, so a rational row must read the same value
    // on both.
    for (const RowVals& r : selfrat[m]) {
      if (r[s.pairA - 1] == r[s.pairB - 1]) eqrat[m].push_back(r);
    }
  }
  // Subdegrees in non-decreasing order; permuted tables share a canonical key.
  for (long long m1 = kMinValency; 3 * m1 <= total; ++m1) {
    for (long long m2 = m1; m1 + 2 * m2 <= total; ++m2) {
      const long long m3 = total - m1 - m2;
      const std::vector<long long> ms = {m1, m2, m3};
      // All self-paired, every eigenvalue rational.
      for (const RowVals& r1 : selfrat[m1]) {
        for (const RowVals& r2 : selfrat[m2]) {
          try_table(s, tag, ms, {0, 1, 2, 3}, {r1, r2, forced_row(s, {&r1, &r2})}, out);
        }
      }
      if (!s.has_pair()) continue;
      // All self-paired with a real surd pair on the shared columns.  Rows
      // are surd candidates or equal-value rational rows; the relative ±√d
      // orientation of two surd rows matters, a global flip does not.
      {
        std::vector<RowVals> pool1 = selfsurd[m1];
        pool1.insert(pool1.end(), eqrat[m1].begin(), eqrat[m1].end());
        std::vector<RowVals> pool2 = selfsurd[m2];
        pool2.insert(pool2.end(), eqrat[m2].begin(), eqrat[m2].end());
        for (const RowVals& r1 : pool1) {
          for (const RowVals& r2 : pool2) {
            if (row_rad(r1) == 0 && row_rad(r2) == 0) continue;  // rational branch above
            if (row_rad(r1) != 0 && row_rad(r2) != 0 && row_rad(r1) != row_rad(r2)) continue;
            try_table(s, tag, ms, {0, 1, 2, 3}, {r1, r2, forced_row(s, {&r1, &r2})}, out);
            if (row_rad(r1) != 0 && row_rad(r2) != 0) {
              const RowVals r2f = swap_pair(s, r2);
              try_table(s, tag, ms, {0, 1, 2, 3}, {r1, r2f, forced_row(s, {&r1, &r2f})}, out);
            }
          }
        }
      }
      // One transposed pair, one self-paired class.
      if (m1 == m2) {
        for (const RowVals& rc : paired[m1]) {
          const RowVals rcc = conj_row(rc);
          try_table(s, tag, ms, {0, 2, 1, 3}, {rc, rcc, forced_row(s, {&rc, &rcc})}, out);
        }
      }
      if (m2 == m3) {
        for (const RowVals& rc : paired[m2]) {
          for (const RowVals& r1 : eqrat[m1]) {
            try_table(s, tag, ms, {0, 1, 3, 2}, {r1, rc, conj_row(rc)}, out);
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<FeasibleParameters> oracle_search(long long p, const CaseType& pattern,
                                              long long bound) {
  if (p < 5 || !is_prime_ll(p)) {
    fail(ErrorCode::BadInput, "oracle_search: p must be a prime >= 5, got " + std::to_string(p));
  }
  if (p > bound) {
    fail(ErrorCode::BoundExceeded, "oracle_search: p = " + std::to_string(p) +
                                       " exceeds the search bound " + std::to_string(bound));
  }
  if (!pattern.commutative()) {
    fail(ErrorCode::NonCommutativeCase,
         "oracle_search: pattern " + std::string(type_tag_name(pattern.tag)) +
             " repeats a constituent; the direct search covers multiplicity-free patterns only");
  }
  const Shape s = make_shape(p, pattern);
  std::vector<FeasibleParameters> found;
  if (s.r == 3) {
    assemble_rank3(s, pattern.tag, found);
  } else if (s.r == 4) {
    assemble_rank4(s, pattern.tag, found);
  } else {
    require_internal(false, "oracle_search: unsupported rank");
  }
  std::map<std::string, FeasibleParameters> unique;
  for (FeasibleParameters& fp : found) {
    unique.emplace(canonical_parameter_key(fp), std::move(fp));
  }
  std::vector<FeasibleParameters> out;
  out.reserve(unique.size());
  for (auto& kv : unique) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace orb
