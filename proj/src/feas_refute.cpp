// Contradiction engines for the four case types that never admit parameter
// sets (I, V, VI, VIII).  Each engine re-derives the impossibility for the
// concrete prime it is given and returns a step-by-step trace together with
// the exact quantities the steps cite, so callers can re-check the arithmetic
// independently instead of trusting a bare verdict.

#include <string>
#include <vector>

#include "orb/errors.hpp"
#include "orb/feasibility.hpp"
#include "orb/rational.hpp"

namespace orb {

namespace {

Rational RQ(long long v) { return Rational(static_cast<long>(v)); }

std::string LL(long long v) { return std::to_string(v); }

// --------------------------------------------------------------------------
// Type I: rank 3, both non-trivial constituents of degree (3p−1)/2.
//
// The trace identity n_i + ((3p−1)/2)(λ_i+μ_i) = 0 makes both subdegrees
// multiples of (3p−1)/2, hence n_1 = n_2 = (3p−1)/2.  Whichever way the two
// classes are paired, the integrality of the eigenvalue sum/product selects
// one residue of p mod 4, and the conjugation rule for that residue then
// demands the opposite reality type from what the discriminant delivers.
// --------------------------------------------------------------------------
Refutation refute_case_I(long long p) {
  Refutation ref;
  ref.tag = TypeTag::I;
  ref.p = p;
  ref.reason = "eigenvalue-conjugation-clash";

  const long long shared = (3 * p - 1) / 2;
  const Rational theta_sum = RQ(-1);
  const Rational theta_product = RQ(1 - 3 * p) / RQ(4);  // self-paired branch
  const Rational disc = RQ(3 * p);                       // = theta_sum² − 4·product
  const Rational paired_norm = RQ(3 * p + 1) / RQ(4);    // transposed branch
  const Rational paired_disc = RQ(-3 * p);

  ref.data["shared_degree"] = RQ(shared);
  ref.data["theta_sum"] = theta_sum;
  ref.data["theta_product"] = theta_product;
  ref.data["disc"] = disc;
  ref.data["paired_theta_sum"] = theta_sum;
  ref.data["paired_theta_norm"] = paired_norm;
  ref.data["paired_disc"] = paired_disc;

  ref.trace.push_back(
      "both non-trivial constituents have degree (3p-1)/2 = " + LL(shared) +
      "; the trace identity n_i + (3p-1)/2*(lambda_i+mu_i) = 0 makes each subdegree a "
      "multiple of it, and n_1+n_2 = 3p-1 leaves only n_1 = n_2 = " + LL(shared));
  ref.trace.push_back(
      "branch A (each class self-paired): the trace identities give lambda_1+mu_1 = -1 and "
      "lambda_1*mu_1 = (1-3p)/4 = " + to_string(theta_product));
  ref.trace.push_back(
      "branch B (the two classes transposed): tr(B_1^2) = 0 gives lambda_1+mu_1 = -1 with "
      "lambda_1*conj(lambda_1) = (3p+1)/4 = " + to_string(paired_norm));
  if (p % 4 == 3) {
    ref.trace.push_back(
        "p = " + LL(p) + " = 3 (mod 4): branch B fails outright because (3p+1)/4 = " +
        to_string(paired_norm) + " is not a rational integer");
    ref.trace.push_back(
        "branch A has integral parameters, and for this residue conjugation swaps the two "
        "degree-" + LL(shared) + " constituents, so mu_1 must be the complex conjugate of lambda_1");
    ref.trace.push_back(
        "but the discriminant 1 - 4*(1-3p)/4 = 3p = " + LL(3 * p) +
        " is positive: the roots (-1+sqrt(3p))/2 and (-1-sqrt(3p))/2 are distinct reals, "
        "never complex conjugates of each other -- contradiction");
  } else {
    ref.trace.push_back(
        "p = " + LL(p) + " = 1 (mod 4): branch A fails outright because (1-3p)/4 = " +
        to_string(theta_product) + " is not a rational integer");
    ref.trace.push_back(
        "branch B has integral parameters, and for this residue conjugation fixes each "
        "degree-" + LL(shared) + " constituent, so lambda_1 and mu_1 must both be real");
    ref.trace.push_back(
        "but the discriminant 1 - 4*(3p+1)/4 = -3p = " + LL(-3 * p) +
        " is negative: the roots (-1+sqrt(-3p))/2 and (-1-sqrt(-3p))/2 form a complex "
        "conjugate pair -- contradiction");
  }
  ref.trace.push_back("both pairings are impossible, so this case never occurs");
  return ref;
}

// --------------------------------------------------------------------------
// Type V: rank 6 with constituent degrees 1, p, p, p−1 (degree p doubled).
//
// Each of the five non-trivial classes contributes a 2×2 eigenvalue block on
// the doubled constituent (eigenvalues λ_i, μ_i filling p dimensions each)
// plus a rational integer ν_i of multiplicity p−1.  Writing n_i = ε_i·p + ν_i,
// dominance forces every ε_i ≥ 1, yet the degree count caps Σε_i at 3.
// --------------------------------------------------------------------------
Refutation refute_case_V(long long p) {
  Refutation ref;
  ref.tag = TypeTag::V;
  ref.p = p;
  ref.reason = "eigenspace-budget-exceeded";

  const long long classes = 5;
  ref.data["classes"] = RQ(classes);
  ref.data["eps_budget"] = RQ(3);
  ref.data["eps_required"] = RQ(classes);
  ref.data["nu_sum"] = RQ(-1);

  ref.trace.push_back(
      "rank 6 with the degree-p constituent doubled: each of the 5 non-trivial classes "
      "carries a pair of eigenvalues lambda_i, mu_i filling p dimensions each, plus a "
      "rational integer nu_i of multiplicity p-1");
  ref.trace.push_back(
      "the trace identity n_i + p*(lambda_i+mu_i) + (p-1)*nu_i = 0 with lambda_i+mu_i a "
      "rational integer gives n_i = eps_i*p + nu_i for rational integers eps_i");
  ref.trace.push_back(
      "dominance: the valency n_i is a simple eigenvalue and every other eigenvalue is "
      "strictly smaller in modulus, so eps_i <= 0 would put nu_i = n_i - eps_i*p >= n_i "
      "on an eigenspace of dimension p-1 -- impossible; hence eps_i >= 1 for every class");
  ref.trace.push_back(
      "summing over the five classes: eps_1+...+eps_5 >= 5");
  ref.trace.push_back(
      "the column sum over the multiplicity-(p-1) constituent gives 1 + nu_1+...+nu_5 = 0, "
      "so nu_1+...+nu_5 = -1");
  ref.trace.push_back(
      "degrees: 3p-1 = n_1+...+n_5 = (eps_1+...+eps_5)*p - 1, so eps_1+...+eps_5 = 3");
  ref.trace.push_back(
      "3 >= 5 is false -- the case cannot occur (budget 3 against minimum 5)");
  return ref;
}

// --------------------------------------------------------------------------
// Type VI: rank 3 with constituent degrees 1, p+1, 2p−2.
//
// Three pairwise distinct multiplicities leave no room for a conjugate surd
// column pair, so every eigenvalue is a rational integer; a transposed class
// pair would force tr(B_1²) = 0 against a positive real spectrum, so both
// classes are self-paired.  The two trace identities then reduce, for each
// integer lambda within the spectral bound, to an explicit quadratic in mu;
// an exhaustive scan shows it has no admissible integer root.
// --------------------------------------------------------------------------
Refutation refute_case_VI(long long p) {
  Refutation ref;
  ref.tag = TypeTag::VI;
  ref.p = p;
  ref.reason = "empty-integer-search";

  // (p+1)·lambda² ≤ max over m in [1,3p−2] of m(3p−m) = 9p²/4.
  long long lambda_bound = 0;
  {
    Int lhs, bound_sq = Int(static_cast<long>(9)) * Int(static_cast<long>(p)) *
                        Int(static_cast<long>(p)) / Int(static_cast<long>(4 * (p + 1)));
    while (true) {
      lhs = Int(static_cast<long>(lambda_bound + 1));
      if (lhs * lhs > bound_sq) break;
      ++lambda_bound;
    }
  }

  long long solutions = 0;
  long long scanned = 0;
  const Int A = Int(static_cast<long>(2 * (p - 1))) * Int(static_cast<long>(2 * p - 1));
  for (long long lam = -lambda_bound; lam <= lambda_bound; ++lam) {
    ++scanned;
    const Int B = Int(static_cast<long>(2 * (p - 1))) *
                  Int(static_cast<long>(2 * (p + 1) * lam + 3 * p));
    const Int C = Int(static_cast<long>((p + 1) * lam)) *
                  Int(static_cast<long>((p + 2) * lam + 3 * p));
    Int disc = B * B - Int(static_cast<long>(4)) * A * C;
    if (sgn(disc) < 0) continue;
    Int root;
    if (!perfect_square(disc, root)) continue;
    for (int branch = 0; branch < 2; ++branch) {
      if (branch == 1 && root == 0) continue;  // repeated root
      const Int numer = (branch == 0) ? Int(-B + root) : Int(-B - root);
      const Int denom = Int(static_cast<long>(2)) * A;
      if (numer % denom != 0) continue;
      const long long mu = to_int64(Int(numer / denom));
      const long long m = -((p + 1) * lam + 2 * (p - 1) * mu);
      if (m < 1 || m > 3 * p - 2) continue;
      ++solutions;
    }
  }
  require_internal(solutions == 0,
                   "refute_types: integer search unexpectedly non-empty for this rank-3 case at p=" +
                       LL(p));

  ref.data["lambda_bound"] = RQ(lambda_bound);
  ref.data["lambda_scanned"] = RQ(scanned);
  ref.data["solutions"] = RQ(0);

  ref.trace.push_back(
      "constituent multiplicities 1, " + LL(p + 1) + ", " + LL(2 * p - 2) +
      " are pairwise distinct, so no two columns can host a conjugate surd pair: every "
      "eigenvalue is a rational integer");
  ref.trace.push_back(
      "were the two non-trivial classes transposes of each other, the pair-trace identity "
      "would force tr(B_1^2) = 0; with a real spectrum tr(B_1^2) >= n_1^2 > 0 -- so both "
      "classes are self-paired");
  ref.trace.push_back(
      "a valency m with eigenvalues lambda (multiplicity p+1) and mu (multiplicity 2p-2) "
      "must satisfy m + (p+1)*lambda + (2p-2)*mu = 0 and m^2 + (p+1)*lambda^2 + "
      "(2p-2)*mu^2 = 3p*m");
  ref.trace.push_back(
      "eliminating m leaves, for each integer lambda, the quadratic "
      "2(p-1)(2p-1)*mu^2 + 2(p-1)*(2(p+1)*lambda+3p)*mu + (p+1)*lambda*((p+2)*lambda+3p) = 0");
  ref.trace.push_back(
      "scanned every lambda with (p+1)*lambda^2 <= 9p^2/4, i.e. |lambda| <= " +
      LL(lambda_bound) + " (" + LL(scanned) +
      " values): no integer root mu gives a valency in [1, 3p-2] -- the case cannot occur");
  return ref;
}

// --------------------------------------------------------------------------
// Type VIII: rank 6 with constituent degrees 1, p+1, p−1, p−1 (p−1 doubled).
//
// The five non-trivial classes reduce to symmetric matrices by amalgamating
// transposed pairs (doubling valency, lambda, and eps).  Every symmetric
// matrix satisfies m = eps(p−1) − 2·lambda with eps ≥ 0 and Σeps = 3, and at
// most one matrix can have eps = 0 — yet every admissible eps pattern places
// an amalgamated matrix on the eps = 0 slot, whose few arithmetic survivors
// all collapse (divisibility, parity, or a forced basic valency of 2).
// --------------------------------------------------------------------------
Refutation refute_case_VIII(long long p) {
  Refutation ref;
  ref.tag = TypeTag::VIII;
  ref.p = p;
  ref.reason = "forced-subdegree-two";

  ref.data["eps_sum"] = RQ(3);

  ref.trace.push_back(
      "five non-trivial classes (an odd number), so at least one is self-paired and each "
      "transposed pair must be amalgamated into one symmetric matrix; amalgamation adds the "
      "two members, doubling the valency, the lambda entry, and the eps value");
  ref.trace.push_back(
      "each symmetric matrix has eigenvalue multiplicities 1, p+1, p-1, p-1 and satisfies "
      "m = eps*(p-1) - 2*lambda; eps < 0 would force |lambda| >= p past the spectral bound, "
      "and the degree count gives eps-sum = 3 over the symmetric matrices");
  ref.trace.push_back(
      "at most one symmetric matrix has eps = 0: the sum of all eps=0 matrices is again "
      "symmetric with eps = 0, and such a matrix is pinned below to a single short valency");
  ref.trace.push_back(
      "one amalgamated pair leaves 4 symmetric matrices with eps pattern (0,1,1,1); two "
      "amalgamated pairs leave 3 with pattern (0,1,2): either way the even eps values, and "
      "hence the eps = 0 slot, fall on amalgamated matrices");
  ref.trace.push_back(
      "an eps = 0 matrix has m = -2*lambda with lambda < 0, and the bound "
      "4p + (p+3)*lambda >= 0 leaves lambda in {-3, -2, -1}");

  // Survivors of the scalar filters at eps = 0 for this p.
  //   lambda = −1  →  m = 2, impossible for a primitive action at any p;
  //   integrality over the multiplicity-(p−1) eigenspaces: (p−1) | 3·lambda·(lambda+1);
  //   variance bound at eps = 0: −12p·lambda − (3p+9)·lambda² ≥ 0.
  std::vector<long long> survivors;
  for (long long lam = -3; lam <= -2; ++lam) {
    if ((3 * lam * (lam + 1)) % (p - 1) != 0) continue;
    if (-12 * p * lam - (3 * p + 9) * lam * lam < 0) continue;
    survivors.push_back(lam);
  }
  ref.data["survivors"] = RQ(static_cast<long long>(survivors.size()));

  ref.trace.push_back(
      "lambda = -1 gives m = 2, and a class of valency 2 cannot occur in a primitive "
      "action; lambda = -2 needs (p-1) | 6 and lambda = -3 needs (p-1) | 18, with the "
      "variance bound -12p*lambda - (3p+9)*lambda^2 >= 0 cutting (p = 7, lambda = -3)");

  require_internal(survivors.size() <= 1,
                   "refute_types: multiple eps=0 survivors at p=" + LL(p));
  if (survivors.empty()) {
    ref.trace.push_back(
        "p = " + LL(p) + " admits no eps = 0 matrix at all, so no eps pattern can be "
        "filled -- the case cannot occur");
    return ref;
  }

  const long long lam = survivors.front();
  const long long m = -2 * lam;
  ref.data["lambda"] = RQ(lam);
  ref.data["merged_valency"] = RQ(m);
  if (lam % 2 != 0) {
    ref.trace.push_back(
        "p = " + LL(p) + " admits the single eps = 0 matrix lambda = " + LL(lam) +
        ", m = " + LL(m) + "; but that matrix must be amalgamated, which forces lambda "
        "even -- the case cannot occur");
    return ref;
  }
  ref.data["basic_valency"] = RQ(m / 2);
  ref.trace.push_back(
      "p = " + LL(p) + " admits the single eps = 0 matrix lambda = " + LL(lam) + ", m = " +
      LL(m) + ", and it must be amalgamated: the two underlying transposed classes would "
      "each have valency " + LL(m / 2) +
      ", impossible for a primitive action -- the case cannot occur");
  return ref;
}

}  // namespace

Refutation refute_types(long long p, TypeTag tag) {
  if (p < 5 || !is_prime_ll(p)) {
    fail(ErrorCode::BadInput, "refute_types: p must be a prime >= 5, got " + LL(p));
  }
  switch (tag) {
    case TypeTag::I:
      return refute_case_I(p);
    case TypeTag::V:
      return refute_case_V(p);
    case TypeTag::VI:
      return refute_case_VI(p);
    case TypeTag::VIII:
      return refute_case_VIII(p);
    default:
      fail(ErrorCode::BadInput, "refute_types: type " + std::string(type_tag_name(tag)) +
                                    " admits parameter sets; use its solver instead");
  }
}

}  // namespace orb
