#ifndef AGTOP_IDEALS_HPP_
#define AGTOP_IDEALS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "agtop/elem_set.hpp"
#include "agtop/table.hpp"

namespace agtop {

enum class IdealKind {
  LeftIdeal,      // S*X <= X
  RightIdeal,     // X*S <= X
  TwoSidedIdeal,  // both
  SubGroupoid,    // X*X <= X
  BiIdeal,        // X*X <= X and (X*S)*X <= X
};

const char* to_string(IdealKind kind);
std::optional<IdealKind> ideal_kind_from_string(const std::string& s);

// Setwise product {a*b : a in A, b in B}. Operands must share t's universe.
ElemSet set_product(const AGTable& t, const ElemSet& a, const ElemSet& b);

// Failure evidence for a kind predicate: the factors, in evaluation order,
// of a product that escapes the subset.
struct KindViolation {
  std::vector<int> factors;
  int              product = -1;
};

struct KindCheck {
  bool                         ok = false;
  std::optional<KindViolation> violation;
};

// Does nonempty X satisfy the kind predicate over validated t? The witness
// is the lexicographically first offending product.
KindCheck is_ideal_kind(const AGTable& t, const ElemSet& x, IdealKind kind);

// All nonempty subsets of the given kind, in ascending bitmask order.
// Scans 2^n subsets; orders above the cap are rejected.
SubsetFamily enumerate_subsets_of_kind(const AGTable& t, IdealKind kind,
                                       int subset_cap = kDefaultSubsetCap);

// Least superset of nonempty X satisfying the kind predicate: the fixpoint
// of expanding by the kind's defining products. Terminates within n rounds.
ElemSet generated_closure(const AGTable& t, const ElemSet& x, IdealKind kind,
                          int subset_cap = kDefaultSubsetCap);

// The principal sets of a generator: S*a, a*S and (S*a)*S.
struct PrincipalIdeals {
  int     generator;
  ElemSet left;       // S*a
  ElemSet right;      // a*S
  ElemSet two_sided;  // (S*a)*S
};

PrincipalIdeals principal_ideals(const AGTable& t, int a);

// The identity battery on principal sets, one result per identity,
// quantified over all generators (pairs where applicable). Not applicable
// without a left identity.
std::vector<ClaimResult> check_principal_identities(const AGTable& t);

// X*X = X exactly.
bool is_idempotent_subset(const AGTable& t, const ElemSet& x);

// Outcome of a family-quantified membership predicate; witness sets are the
// first offending tuple in family order.
struct MemberCheck {
  bool                 ok = false;
  std::vector<ElemSet> witness;
};

// P is prime in its kind family: A*B <= P forces A <= P or B <= P for all
// family members A, B (family enumerated in full, including S and P).
MemberCheck is_prime_member(const AGTable& t, const ElemSet& p, IdealKind kind,
                            int subset_cap = kDefaultSubsetCap);

// Semiprime: C*C <= P forces C <= P.
MemberCheck is_semiprime_member(const AGTable& t, const ElemSet& p, IdealKind kind,
                                int subset_cap = kDefaultSubsetCap);

// Strongly irreducible: A & B <= P forces A <= P or B <= P.
MemberCheck is_strongly_irreducible(const AGTable& t, const ElemSet& p, IdealKind kind,
                                    int subset_cap = kDefaultSubsetCap);

// Quasi-prime: the prime condition over the left-ideal family. P must be a
// left ideal.
MemberCheck is_quasi_prime(const AGTable& t, const ElemSet& p,
                           int subset_cap = kDefaultSubsetCap);

// The element-level quasi-prime criterion: (S*a)*b <= P forces a in P or
// b in P, over all pairs (a, b). Needs a left identity.
struct CriterionCheck {
  Verdict verdict = Verdict::Holds;
  int     a = -1;
  int     b = -1;
};

CriterionCheck quasi_prime_criterion(const AGTable& t, const ElemSet& p);

// (x*a)*x for a single pair.
int sandwich(const AGTable& t, int x, int a);

// H(a) = {x : (x*a)*x = a}.
ElemSet h_set(const AGTable& t, int a);
// The fixpoint variant {x : (x*a)*x = x}.
ElemSet h_set_fixpoint(const AGTable& t, int a);
// Exploratory form {x : (x*a)*x = target}.
ElemSet sandwich_preimage(const AGTable& t, int a, int target);

struct FamilyProperties {
  bool all_idempotent            = false;
  bool totally_ordered           = false;
  bool intersection_closed       = false;
  bool semilattice_under_product = false;
};

// Structure report of a kind family: idempotency of every member, total
// order under inclusion, closure of nonempty pairwise intersections, and
// whether the idempotent members form a semilattice under the setwise
// product.
FamilyProperties family_properties(const AGTable& t, IdealKind kind,
                                   int subset_cap = kDefaultSubsetCap);

}  // namespace agtop

#endif  // AGTOP_IDEALS_HPP_
