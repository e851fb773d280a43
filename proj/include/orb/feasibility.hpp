#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orb/rational.hpp"

namespace orb {

// ---------------------------------------------------------------------------
// Exact surd values over one quadratic extension, complex allowed.
//
// Unlike QuadraticNumber (which is ordered and therefore real-only), the
// radicand here may be negative: the paired rank-4 parameter families have
// complex-conjugate eigenvalue pairs.  Canonical form: rad squarefree and
// != 1, or rad = 0 with coeff = 0, so equality is structural.
// ---------------------------------------------------------------------------
class Surd {
 public:
  Surd() : rat_(0), coeff_(0), rad_(0) {}
  Surd(Rational rational_part) : rat_(std::move(rational_part)), coeff_(0), rad_(0) {}
  Surd(long rational_part) : rat_(rational_part), coeff_(0), rad_(0) {}
  // General constructor; pulls square factors out of the radicand (which may
  // be negative) and normalizes coeff = 0 to a plain rational.
  Surd(Rational rational_part, Rational surd_coeff, long long radicand);

  const Rational& rat() const { return rat_; }
  const Rational& coeff() const { return coeff_; }
  long long rad() const { return rad_; }

  bool is_rational() const { return rad_ == 0; }
  bool is_real() const { return rad_ >= 0; }
  bool is_zero() const { return rat_ == 0 && coeff_ == 0; }

  bool operator==(const Surd& o) const {
    return rat_ == o.rat_ && coeff_ == o.coeff_ && rad_ == o.rad_;
  }
  bool operator!=(const Surd& o) const { return !(*this == o); }

  Surd add(const Surd& o) const;
  Surd sub(const Surd& o) const;
  Surd mul(const Surd& o) const;  // MixedRadicands on incompatible radicands
  Surd neg() const;
  // Conjugate within the extension (sign of the surd part); for a negative
  // radicand this is exactly complex conjugation.
  Surd conj() const;
  // value · conj(value) = rat² − coeff²·rad; equals |value|² when complex.
  Rational norm() const;
  // Sign of the real value (Internal if called on a complex value).
  int sign() const;
  // Exact |value| < bound, valid for real and complex values alike.
  bool abs_less_than(const Rational& bound) const;

  // Rendering identical to QuadraticNumber::str for real values; negative
  // radicands appear as e.g. "1+1*sqrt(-3)".
  std::string str() const;

 private:
  Rational rat_;
  Rational coeff_;
  long long rad_;
};

inline Surd operator+(const Surd& a, const Surd& b) { return a.add(b); }
inline Surd operator-(const Surd& a, const Surd& b) { return a.sub(b); }
inline Surd operator*(const Surd& a, const Surd& b) { return a.mul(b); }
inline Surd operator-(const Surd& a) { return a.neg(); }

// ---------------------------------------------------------------------------
// Decomposition patterns of the permutation character for degree n = 3p.
// ---------------------------------------------------------------------------
enum class TypeTag { I, II, III, IV, V, VI, VII, VIII };

const char* type_tag_name(TypeTag tag);
TypeTag parse_type_tag(const std::string& text);  // BadInput on anything else

// A linear expression c_p·p + c_1, the shape of all symbolic degree data.
struct LinearInP {
  Rational coeff_p;
  Rational constant;

  Rational eval(long long p) const {
    return coeff_p * Rational(static_cast<long>(p)) + constant;
  }
  std::string str() const;  // e.g. "p", "2p-1", "(3p-1)/2", "3(p-1)"
};

// One non-principal irreducible constituent: its degree and multiplicity.
struct Constituent {
  LinearInP degree;
  int multiplicity = 1;
};

// One of the eight admissible decompositions: rank and constituent pattern.
// The principal constituent (degree 1, multiplicity 1) is implicit.
struct CaseType {
  TypeTag tag = TypeTag::I;
  int rank = 0;
  std::vector<Constituent> constituents;

  bool commutative() const;  // all multiplicities equal to 1
};

CaseType case_type(TypeTag tag);
const std::vector<CaseType>& all_case_types();

// ---------------------------------------------------------------------------
// Solver output: a fully explicit parameter set, or the reason none exists.
// ---------------------------------------------------------------------------

// One non-trivial class row of a parameter table: subdegree plus the exact
// eigenvalue on every non-principal eigen-column.  For the quadratic-family
// solutions the same data is also carried as polynomial text in the family
// parameter a.
struct ParameterRow {
  long long subdegree = 0;
  std::vector<Surd> values;
  std::string symbolic_subdegree;          // empty unless family-parametrized
  std::vector<std::string> symbolic_values;
};

struct FeasibleParameters {
  TypeTag tag = TypeTag::I;
  long long p = 0;
  std::optional<long long> a;    // family parameter, when the type has one
  std::string case_label;        // "i" / "ii" / "iii"; empty for search output
  std::vector<long long> multiplicities;  // f per eigen-column; leading 1
  std::vector<long long> subdegrees;      // per class; leading 1
  std::vector<ParameterRow> rows;         // classes 1..r−1, table order
  std::vector<int> pairing;               // involution on classes, 0 fixed
  std::string pairing_note;
  std::map<std::string, Rational> derived;  // named constants (e.g. "a_223")
  // Group-theoretic refinement for the rank-3 two-family type: whether the
  // family parameter has the parity forced by the normalizer-index theorem,
  // and the divisor bound on |N(P):P| that theorem yields.
  std::optional<bool> parity_ok;
  std::optional<long long> normalizer_divisor;
};

struct Refutation {
  TypeTag tag = TypeTag::I;
  long long p = 0;
  std::string reason;                     // stable machine-readable code
  std::vector<std::string> trace;         // the contradiction, step by step
  std::map<std::string, Rational> data;   // exact quantities cited in trace
};

// ---------------------------------------------------------------------------
// Prime classification and the closed-form solvers.
// ---------------------------------------------------------------------------

// Membership of p in the three quadratic families and the exceptional set.
struct FamilyMembership {
  std::optional<long long> a_form_i;    // p = 3a²+3a+1,    a ≥ 1
  std::optional<long long> a_form_ii;   // p = 48a²+30a+5,  a ≥ 0
  std::optional<long long> a_form_iii;  // p = 48a²+66a+23, a ≥ 0
  bool exceptional = false;             // p ∈ {7, 19, 31}

  bool any() const {
    return a_form_i || a_form_ii || a_form_iii || exceptional;
  }
};

// Exact integer solution of the family quadratics (BadInput unless p is a
// prime ≥ 5).
FamilyMembership classify_prime(long long p);

// Rank-3 type with constituent degrees (p, 2p−1): feasible exactly when
// 16p−5 = 3b²; the two sub-cases correspond to b ≡ 5 and b ≡ 11 (mod 16).
std::variant<FeasibleParameters, Refutation> solve_type_II(long long p);

// Rank-3 type with constituent degrees (2p, p−1): solutions exist exactly
// when 4p−1 = 3(2a+1)²; sub-case (i) drops out at a = 1 because a structure
// constant computed from the eigen-data turns negative.
std::vector<FeasibleParameters> solve_type_III(long long p);

// Rank-4 type with constituent degrees (p, p, p−1): the paired sub-cases
// (i)/(ii) carry complex-conjugate eigenvalue pairs and parity filters from
// structure-constant integrality; the self-paired sub-case (iii) is real.
std::vector<FeasibleParameters> solve_type_IV(long long p);

// Rank-4 type with constituent degrees (p+1, p−1, p−1): bounded enumeration
// of the integer eigenvalue data under the divisibility and discriminant
// constraints, then exact surd completion and structure-constant filtering.
std::vector<FeasibleParameters> solve_type_VII(long long p);

// Contradiction engines for the four types that never admit solutions.
// BadInput unless tag ∈ {I, V, VI, VIII}.
Refutation refute_types(long long p, TypeTag tag);

// ---------------------------------------------------------------------------
// Independent brute-force oracle (no closed-form knowledge).
// ---------------------------------------------------------------------------

// Enumerates all parameter sets for the given commutative pattern by direct
// search: subdegree compositions, pairing structures, integer eigenvalue
// candidates within the spectral bound, surd candidates via (sum, product)
// pairs — filtered by the exact trace relations, column sums, non-negative
// integral structure constants, and the dominance bound.
// Errors: BoundExceeded (p > bound), NonCommutativeCase.
std::vector<FeasibleParameters> oracle_search(long long p, const CaseType& pattern,
                                              long long bound = 200);

// ---------------------------------------------------------------------------
// Normalizer-index divisor bound for the rank-3 two-family type.
// ---------------------------------------------------------------------------
struct NormalizerBound {
  long long divisor = 0;            // 8, refined to 2 at the stated parity
  std::array<long long, 3> gcds{};  // the three Euclidean outcomes
};

// case_label ∈ {"i", "ii"}, a ≥ 0 (BadInput otherwise).
NormalizerBound normalizer_bound_type_II(const std::string& case_label, long long a);

// ---------------------------------------------------------------------------
// Known imprimitive subdegree patterns per type (encoded facts).
// ---------------------------------------------------------------------------
struct ImprimitivePattern {
  std::string description;
  std::vector<LinearInP> entries;   // symbolic subdegrees, leading 1
  std::optional<long long> only_p;  // pattern specific to one p

  // BadInput when the pattern is tied to a different p.
  std::vector<long long> evaluate(long long p) const;
};

// tag ∈ {III, IV, V, VII, VIII} (BadInput otherwise); an empty vector means
// no imprimitive groups of that type exist.
std::vector<ImprimitivePattern> imprimitive_expectations(TypeTag tag);

// ---------------------------------------------------------------------------
// Exact verification and canonical comparison of parameter sets.
// ---------------------------------------------------------------------------
struct FeasibilityCheck {
  bool ok = false;
  std::string first_failure;       // empty when ok
  int rank = 0;
  std::vector<long long> tensor;   // structure constants, r³ row-major

  long long at(int i, int j, int k) const {
    return tensor[(size_t(i) * size_t(rank) + size_t(j)) * size_t(rank) + size_t(k)];
  }
};

// Recomputes every structure constant from the eigen-data and verifies, all
// exactly: subdegree sum, trace relations, column sums, conjugate-column
// consistency, non-negative integral structure constants, and the strict
// dominance bound on every row.
FeasibilityCheck verify_parameters(const FeasibleParameters& params);

// Repackages a concrete group's eigenvalue table (degree 3p required) as a
// parameter set under the stated pattern, so group-derived data flows
// through the same verifier and canonical-key comparison as solver output.
struct EigenvalueTable;
FeasibleParameters parameters_from_eigentable(const EigenvalueTable& table, TypeTag tag);

// Canonical serialization invariant under row order, permutation of
// eigen-columns within equal-multiplicity blocks, and conjugation of surd
// column pairs; equality of keys is the solver/oracle agreement criterion.
std::string canonical_parameter_key(const FeasibleParameters& params);

// Frozen text renderings (table layout: one row per class, valency first).
std::string parameters_tsv(const FeasibleParameters& params);
std::string parameters_json(const FeasibleParameters& params);
std::string refutation_tsv(const Refutation& ref);
std::string refutation_json(const Refutation& ref);

}  // namespace orb
