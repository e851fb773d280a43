#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orb/rational.hpp"

namespace orb {

// Integer triples (γ₁, γ₂, γ₃) for which the three real square roots
// √(4p−1−3γ_i²) can be signed to sum to zero while γ₁+γ₂+γ₃+1 = 0.  These
// are exactly the last-column candidates of the all-self-paired rank-4
// tables; removing the radicals turns the system into the integer pair
//
//   4p−1 = γ₁²+γ₂²+γ₃²+2T,   T ≥ 0,
//   T²   = Σγ_i⁴ − Σ_{i<j} γ_i²γ_j²,
//
// which is what both scanners solve.  Two one-parameter families account for
// almost every solution; the rest are genuinely sporadic.
enum class NuClass {
  // {2a+1, −a−1, −a−1} at p = 3a²+3a+1.  The parameter a may be negative:
  // a and −1−a give the same prime and mirror-image triples, so each family
  // prime carries two triples of this class.
  family_quadratic,
  // {γ, −γ, −1}, which forces p = γ² — never prime, but the classifier
  // accepts composite inputs so the pattern stays testable.
  family_square,
  sporadic,
};

const char* nu_class_name(NuClass c);

struct NuTriple {
  long long p = 0;
  std::array<long long, 3> gamma{};  // stored in non-increasing order
  long long S = 0;                   // γ₂ + γ₃
  long long D = 0;                   // γ₂ − γ₃ (≥ 0 by the ordering)
  long long T = 0;                   // the de-radicalised auxiliary above
  NuClass classification = NuClass::sporadic;
  std::optional<long long> family_a;  // set for family_quadratic

  friend bool operator==(const NuTriple& x, const NuTriple& y) {
    return x.p == y.p && x.gamma == y.gamma;
  }
  friend bool operator<(const NuTriple& x, const NuTriple& y) {
    if (x.p != y.p) return x.p < y.p;
    return x.gamma < y.gamma;
  }
};

// Validates a candidate triple against every defining identity — the linear
// relation, the radicand bound, the two de-radicalised equations, and the
// exact sign analysis (each nonzero radicand must be c²·d for one shared
// square-free d, with the largest c equal to the sum of the other two) —
// and classifies it.  Returns nothing if any identity fails.  Accepts any
// n ≥ 2 in place of a prime so the square family is reachable in tests.
std::optional<NuTriple> nu_triple_from(long long p, long long g1, long long g2, long long g3);

// Exhaustive enumeration of all valid triples at one p, by direct iteration
// over the radicand bound |γ_i| ≤ √((4p−1)/3).  Output is sorted.
std::vector<NuTriple> nu_solutions_bruteforce(long long p);

// Factorisation-driven scan over every prime p ≤ maxP at once.  For each
// candidate S the identity
//
//   (X+W)(Z−Y) = −8S−4   with  X·Z = 3S²,  Y·W = D²,  P = XY,  Q = ZW,
//   P−Q = 4(S+1)²−S²−D²,  P+Q = 4T,
//
// recovers D and T from divisor pairs, and p follows from the first
// de-radicalised equation.  Every hit is re-validated by nu_triple_from, so
// the result equals the brute-force scan aggregated over the same primes.
// Throws CapExceeded when maxP exceeds the cap.
std::vector<NuTriple> birch_factor_scan(long long maxP, long long cap = 1000000);

// Empirical sparsity summary over p ≤ maxP.
struct DensityReport {
  long long maxP = 0;
  long long triple_count = 0;            // valid triples across all primes
  std::vector<long long> solvable_primes;  // primes owning at least one triple
  long long family_prime_count = 0;      // primes whose triples are all family
  long long sporadic_prime_count = 0;    // primes owning a sporadic triple
  Rational ratio_squared;                // (#solvable)² / maxP, exact
  double ratio = 0.0;                    // #solvable / √maxP
};

DensityReport density_report(long long maxP, long long cap = 1000000);

}  // namespace orb
