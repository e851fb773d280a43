#include "orb/birch.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "orb/errors.hpp"

namespace orb {

namespace {

long long isqrt_ll(long long n) {
  if (n <= 0) return 0;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Positive divisors of |n| (n ≠ 0), unsorted.
std::vector<long long> divisors_of(long long n) {
  if (n < 0) n = -n;
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  return out;
}

// The exact sign analysis: the radicands 4p−1−3γ_i² (all ≥ 0 by the bound
// check) must share one square-free kernel d, every nonzero one being c²·d,
// and the largest coefficient c must equal the sum of the other two — then
// and only then can the three real roots be signed to cancel.
bool roots_cancel(long long p, const std::array<long long, 3>& g) {
  std::vector<long long> coeff;
  long long kernel = 0;
  for (long long v : g) {
    const long long rad = 4 * p - 1 - 3 * v * v;
    if (rad == 0) {
      coeff.push_back(0);
      continue;
    }
    Int sf, root;
    squarefree_decompose(Int(static_cast<long>(rad)), sf, root);
    const long long d = to_int64(sf);
    if (kernel == 0) kernel = d;
    if (d != kernel) return false;
    coeff.push_back(to_int64(root));
  }
  std::sort(coeff.begin(), coeff.end());
  return coeff[2] == coeff[0] + coeff[1];
}

void classify(NuTriple& t) {
  const auto& g = t.gamma;
  // A repeated value r beside the partner 2a+1 with a = −1−r, at
  // p = 3a²+3a+1: the quadratic family (negative a gives the mirror triple
  // of the same prime, since a and −1−a produce the same p).
  struct Split {
    bool repeated;
    long long r, partner;
  };
  const Split splits[2] = {{g[1] == g[2], g[1], g[0]}, {g[0] == g[1], g[0], g[2]}};
  for (const Split& s : splits) {
    if (!s.repeated) continue;
    const long long a = -1 - s.r;
    if (s.partner == 2 * a + 1 && t.p == 3 * a * a + 3 * a + 1) {
      t.classification = NuClass::family_quadratic;
      t.family_a = a;
      return;
    }
  }
  // An opposite pair {γ, −γ} forces the remaining value to −1 and p = γ².
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (g[i] != 0 && g[i] == -g[j] && t.p == g[i] * g[i]) {
        t.classification = NuClass::family_square;
        return;
      }
    }
  }
  t.classification = NuClass::sporadic;
}

}  // namespace

const char* nu_class_name(NuClass c) {
  switch (c) {
    case NuClass::family_quadratic: return "family-quadratic";
    case NuClass::family_square: return "family-square";
    case NuClass::sporadic: return "sporadic";
  }
  return "?";
}

std::optional<NuTriple> nu_triple_from(long long p, long long g1, long long g2, long long g3) {
  if (p < 2) return std::nullopt;
  std::array<long long, 3> g = {g1, g2, g3};
  std::sort(g.begin(), g.end(), std::greater<long long>());
  if (g[0] + g[1] + g[2] + 1 != 0) return std::nullopt;
  const long long M = 4 * p - 1;
  for (long long v : g) {
    if (3 * v * v > M) return std::nullopt;
  }
  long long sq = 0, quart = 0;
  for (long long v : g) {
    sq += v * v;
    quart += v * v * v * v;
  }
  const long long twoT = M - sq;
  if (twoT < 0 || twoT % 2 != 0) return std::nullopt;
  const long long T = twoT / 2;
  const long long cross = g[0] * g[0] * g[1] * g[1] + g[1] * g[1] * g[2] * g[2] +
                          g[2] * g[2] * g[0] * g[0];
  if (T * T != quart - cross) return std::nullopt;
  if (!roots_cancel(p, g)) return std::nullopt;
  NuTriple t;
  t.p = p;
  t.gamma = g;
  t.S = g[1] + g[2];
  t.D = g[1] - g[2];
  t.T = T;
  classify(t);
  return t;
}

std::vector<NuTriple> nu_solutions_bruteforce(long long p) {
  if (p < 2) fail(ErrorCode::BadInput, "triple enumeration needs p >= 2, got " + std::to_string(p));
  const long long B = isqrt_ll((4 * p - 1) / 3);
  std::vector<NuTriple> out;
  for (long long a = B; a >= -B; --a) {
    for (long long b = a; b >= -B; --b) {
      const long long c = -1 - a - b;
      if (c > b || c < -B) continue;
      if (auto t = nu_triple_from(p, a, b, c)) out.push_back(*t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NuTriple> birch_factor_scan(long long maxP, long long cap) {
  if (maxP > cap)
    fail(ErrorCode::CapExceeded, "scan limit " + std::to_string(maxP) +
                                     " exceeds the configured cap " + std::to_string(cap));
  std::set<NuTriple> found;
  if (maxP < 2) return {};
  // Any one γ may play the distinguished role γ₁ = −1−S; it obeys
  // 3γ₁² ≤ 4p−1, so |S| ≤ 2·√((4·maxP−1)/3) + 1 envelopes every solution.
  // S = 0 would force the square family p = (D/2)², never prime.
  const long long Smax = 2 * isqrt_ll((4 * maxP - 1) / 3) + 1;
  for (long long S = -Smax; S <= Smax; ++S) {
    if (S == 0) continue;
    const long long rhs = -8 * S - 4;  // never zero
    const std::vector<long long> xs = divisors_of(3 * S * S);
    const std::vector<long long> us = divisors_of(rhs);
    for (long long x0 : xs) {
      for (int xsign = 0; xsign < 2; ++xsign) {
        const long long X = xsign ? -x0 : x0;
        const long long Z = 3 * S * S / X;
        for (long long u0 : us) {
          for (int usign = 0; usign < 2; ++usign) {
            const long long u = usign ? -u0 : u0;
            const long long W = u - X;
            const long long Y = Z - rhs / u;
            const long long yw = Y * W;
            long long D = 0;
            if (yw < 0 || !perfect_square_ll(yw, D)) continue;
            if ((D - S) % 2 != 0) continue;
            // Cross-check the divisor split against the de-radicalised pair.
            if (X * Y - Z * W != 4 * (S + 1) * (S + 1) - S * S - D * D) continue;
            const long long fourT = X * Y + Z * W;
            if (fourT < 0 || fourT % 4 != 0) continue;
            const long long T = fourT / 4;
            if (T > 2 * maxP) continue;
            const long long g1 = -1 - S;
            const long long g2 = (S + D) / 2;
            const long long g3 = (S - D) / 2;
            const long long fourP = 1 + g1 * g1 + g2 * g2 + g3 * g3 + 2 * T;
            if (fourP % 4 != 0) continue;
            const long long p = fourP / 4;
            if (p < 2 || p > maxP || !is_prime_ll(p)) continue;
            if (auto t = nu_triple_from(p, g1, g2, g3)) found.insert(*t);
          }
        }
      }
    }
  }
  return std::vector<NuTriple>(found.begin(), found.end());
}

DensityReport density_report(long long maxP, long long cap) {
  DensityReport rep;
  rep.maxP = maxP;
  std::vector<NuTriple> all = birch_factor_scan(maxP, cap);
  rep.triple_count = static_cast<long long>(all.size());
  long long prev = 0;
  bool prev_sporadic = false;
  auto close_prime = [&]() {
    if (prev == 0) return;
    rep.solvable_primes.push_back(prev);
    if (prev_sporadic)
      ++rep.sporadic_prime_count;
    else
      ++rep.family_prime_count;
  };
  for (const NuTriple& t : all) {
    if (t.p != prev) {
      close_prime();
      prev = t.p;
      prev_sporadic = false;
    }
    if (t.classification == NuClass::sporadic) prev_sporadic = true;
  }
  close_prime();
  const long long k = static_cast<long long>(rep.solvable_primes.size());
  if (maxP >= 1) {
    rep.ratio_squared = make_rational(k * k, maxP);
    rep.ratio = static_cast<double>(k) / std::sqrt(static_cast<double>(maxP));
  }
  return rep;
}

}  // namespace orb
