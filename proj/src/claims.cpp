#include "agtop/claims.hpp"

#include <algorithm>

#include "agtop/ideals.hpp"
#include "agtop/topology.hpp"

namespace agtop {

namespace {

ClaimResult holds(std::string id) {
  return {std::move(id), Verdict::Holds, {}, ""};
}

ClaimResult vacuous(std::string id, std::string note) {
  return {std::move(id), Verdict::Vacuous, {}, std::move(note)};
}

ClaimResult not_applicable(std::string id, std::string note) {
  return {std::move(id), Verdict::NotApplicable, {}, std::move(note)};
}

ClaimResult violated(std::string id, Witness w, std::string note = "") {
  return {std::move(id), Verdict::Violated, std::move(w), std::move(note)};
}

Witness law_witness(const AxiomReport& report) {
  Witness w;
  w.elements = report.witness;
  w.detail = std::string(to_string(report.law)) + " fails";
  return w;
}

// C1: the medial law follows from the left invertive law alone.
ClaimResult claim_medial(const AGTable& t, int) {
  AxiomReport rep = check_medial(t);
  if (rep.holds) return holds("C1");
  return violated("C1", law_witness(rep));
}

// C2: (ab)(cd) = (db)(ca) whenever a left identity exists.
ClaimResult claim_paramedial3(const AGTable& t, int) {
  if (left_identities(t).empty()) return not_applicable("C2", "no left identity");
  AxiomReport rep = check_paramedial3(t);
  if (rep.holds) return holds("C2");
  return violated("C2", law_witness(rep));
}

// C3: position-anchored permutation identity on fourfold power products.
ClaimResult claim_permutation_identity(const AGTable& t, int) {
  const int max_exp = 3;
  AxiomReport rep = check_permutation_identity(t, max_exp);
  if (!rep.applicable) return not_applicable("C3", rep.note);
  if (rep.holds) return holds("C3");
  return violated("C3", law_witness(rep),
                  "exponents anchored to positions; a variable-anchored or "
                  "different power convention may be intended");
}

// C4: the absorbing element, when present, absorbs on both sides.
ClaimResult claim_zero_absorption(const AGTable& t, int) {
  auto z = find_zero(t);
  if (!z) return not_applicable("C4", "no zero");
  for (int s = 0; s < t.order(); ++s) {
    if (t.at(*z, s) != *z || t.at(s, *z) != *z) {
      Witness w;
      w.elements = {*z, s};
      w.detail = "reported zero fails to absorb";
      return violated("C4", std::move(w));
    }
  }
  return holds("C4");
}

// C5: B*T and (T*T)*B are bi-ideals for every left ideal T and bi-ideal B.
ClaimResult claim_products_with_left_ideal(const AGTable& t, int cap) {
  if (left_identities(t).empty()) return not_applicable("C5", "no left identity");
  SubsetFamily lefts = enumerate_subsets_of_kind(t, IdealKind::LeftIdeal, cap);
  SubsetFamily bis = enumerate_subsets_of_kind(t, IdealKind::BiIdeal, cap);
  for (const ElemSet& tt : lefts) {
    const ElemSet t2 = set_product(t, tt, tt);
    for (const ElemSet& b : bis) {
      const ElemSet bt = set_product(t, b, tt);
      if (!is_ideal_kind(t, bt, IdealKind::BiIdeal).ok) {
        Witness w;
        w.sets = {b, tt, bt};
        w.detail = "B*T is not a bi-ideal";
        return violated("C5", std::move(w));
      }
      const ElemSet t2b = set_product(t, t2, b);
      if (!is_ideal_kind(t, t2b, IdealKind::BiIdeal).ok) {
        Witness w;
        w.sets = {b, tt, t2b};
        w.detail = "(T*T)*B is not a bi-ideal";
        return violated("C5", std::move(w));
      }
    }
  }
  return holds("C5");
}

// C6: products of bi-ideals are bi-ideals.
ClaimResult claim_bi_product(const AGTable& t, int cap) {
  if (left_identities(t).empty()) return not_applicable("C6", "no left identity");
  SubsetFamily bis = enumerate_subsets_of_kind(t, IdealKind::BiIdeal, cap);
  for (const ElemSet& b1 : bis) {
    for (const ElemSet& b2 : bis) {
      const ElemSet prod = set_product(t, b1, b2);
      if (!is_ideal_kind(t, prod, IdealKind::BiIdeal).ok) {
        Witness w;
        w.sets = {b1, b2, prod};
        w.detail = "product of bi-ideals is not a bi-ideal";
        return violated("C6", std::move(w));
      }
    }
  }
  return holds("C6");
}

// C7: idempotent bi-ideals are two-sided ideals.
ClaimResult claim_idempotent_bi_is_ideal(const AGTable& t, int cap) {
  if (left_identities(t).empty()) return not_applicable("C7", "no left identity");
  SubsetFamily bis = enumerate_subsets_of_kind(t, IdealKind::BiIdeal, cap);
  bool any = false;
  for (const ElemSet& b : bis) {
    if (set_product(t, b, b) != b) continue;
    any = true;
    if (!is_ideal_kind(t, b, IdealKind::TwoSidedIdeal).ok) {
      Witness w;
      w.sets = {b};
      w.detail = "idempotent bi-ideal is not a two-sided ideal";
      return violated("C7", std::move(w));
    }
  }
  if (!any) return vacuous("C7", "no idempotent bi-ideals");
  return holds("C7");
}

// C8: a proper bi-ideal never contains a left identity.
ClaimResult claim_proper_excludes_identity(const AGTable& t, int cap) {
  const ElemSet ids = left_identities(t);
  if (ids.empty()) return not_applicable("C8", "no left identity");
  SubsetFamily bis = enumerate_subsets_of_kind(t, IdealKind::BiIdeal, cap);
  const ElemSet full = ElemSet::full(t.order());
  bool any = false;
  for (const ElemSet& b : bis) {
    if (b == full) continue;
    any = true;
    for (int e : ids.elements()) {
      if (b.contains(e)) {
        Witness w;
        w.sets = {b};
        w.elements = {e};
        w.detail = "proper bi-ideal contains a left identity";
        return violated("C8", std::move(w));
      }
    }
  }
  if (!any) return vacuous("C8", "no proper bi-ideals");
  return holds("C8");
}

// Shared by C9 and C17: all-idempotent <=> (A & B = A*B) <=> the family is a
// semilattice under the setwise product.
ClaimResult claim_idempotency_equivalence(const AGTable& t, IdealKind kind,
                                          std::string id, int cap) {
  SubsetFamily fam = enumerate_subsets_of_kind(t, kind, cap);
  FamilyProperties props = family_properties(t, kind, cap);
  bool cap_equals_product = true;
  ElemSet wit_a, wit_b;
  for (const ElemSet& a : fam) {
    for (const ElemSet& b : fam) {
      if (a.intersect(b) != set_product(t, a, b)) {
        cap_equals_product = false;
        wit_a = a;
        wit_b = b;
        break;
      }
    }
    if (!cap_equals_product) break;
  }
  const bool stmt1 = props.all_idempotent;
  const bool stmt2 = cap_equals_product;
  const bool stmt3 = props.all_idempotent && props.semilattice_under_product;
  if (stmt1 == stmt2 && stmt2 == stmt3) return holds(id);
  Witness w;
  w.detail = std::string("equivalence broken: all-idempotent=")
             + (stmt1 ? "yes" : "no") + " cap-equals-product="
             + (stmt2 ? "yes" : "no") + " semilattice=" + (stmt3 ? "yes" : "no");
  if (!cap_equals_product) w.sets = {wit_a, wit_b};
  return violated(std::move(id), std::move(w));
}

ClaimResult claim_bi_idempotency_equivalence(const AGTable& t, int cap) {
  if (left_identities(t).empty()) return not_applicable("C9", "no left identity");
  return claim_idempotency_equivalence(t, IdealKind::BiIdeal, "C9", cap);
}

// Shared by C10 and C18: every member prime <=> every member idempotent and
// the family totally ordered by inclusion.
ClaimResult claim_prime_equivalence(const AGTable& t, IdealKind kind,
                                    std::string id, int cap) {
  SubsetFamily fam = enumerate_subsets_of_kind(t, kind, cap);
  bool all_prime = true;
  ElemSet nonprime;
  for (const ElemSet& p : fam) {
    if (!is_prime_member(t, p, kind, cap).ok) {
      all_prime = false;
      nonprime = p;
      break;
    }
  }
  FamilyProperties props = family_properties(t, kind, cap);
  const bool rhs = props.all_idempotent && props.totally_ordered;
  if (all_prime == rhs) return holds(id);
  Witness w;
  w.detail = std::string("all-prime=") + (all_prime ? "yes" : "no")
             + " but idempotent-and-chain=" + (rhs ? "yes" : "no");
  if (!all_prime) w.sets = {nonprime};
  return violated(std::move(id), std::move(w));
}

ClaimResult claim_bi_prime_equivalence(const AGTable& t, int cap) {
  if (left_identities(t).empty()) return not_applicable("C10", "no left identity");
  return claim_prime_equivalence(t, IdealKind::BiIdeal, "C10", cap);
}

// Shared by C11 and C12: the space construction yields a topology whose
// least generator opens nothing and whose full generator opens everything,
// and the generator-to-open map preserves intersections and unions.
ClaimResult claim_topology(const AGTable& t, SpaceKind mode, std::string id,
                           int cap) {
  if (!find_zero(t)) return not_applicable(id, "no zero");
  FiniteTopology topo = mode == SpaceKind::BiIdealSpace
                            ? build_gamma_omega(t, cap)
                            : build_gamma_ps(t, cap);
  ClaimResult axioms = verify_topology(topo);
  if (axioms.verdict != Verdict::Holds) {
    return violated(std::move(id), axioms.witness, "topology axioms fail");
  }
  if (!labels_coherent(topo)) {
    Witness w;
    w.detail = "open set disagrees with the set regenerated from its label";
    return violated(std::move(id), std::move(w));
  }
  // The least generator is {0}: every member of the generating family
  // contains the zero, so its open is empty and O_S is the full point set.
  const int z = *find_zero(t);
  const IdealKind kind = mode == SpaceKind::BiIdealSpace
                             ? IdealKind::BiIdeal
                             : IdealKind::TwoSidedIdeal;
  SubsetFamily gens = enumerate_subsets_of_kind(t, kind, cap);
  for (const ElemSet& g : gens) {
    if (!g.contains(z)) {
      Witness w;
      w.sets = {g};
      w.elements = {z};
      w.detail = "generating member misses the zero";
      return violated(std::move(id), std::move(w));
    }
  }
  const ElemSet least = ElemSet::single(t.order(), z);
  if (std::binary_search(gens.begin(), gens.end(), least)) {
    if (!open_of(least, topo.points).empty()) {
      Witness w;
      w.sets = {least};
      w.detail = "open of the least generator is nonempty";
      return violated(std::move(id), std::move(w));
    }
  } else {
    Witness w;
    w.sets = {least};
    w.detail = "{0} is not a generating member";
    return violated(std::move(id), std::move(w));
  }
  std::vector<int> full_open = open_of(ElemSet::full(t.order()), topo.points);
  if (full_open.size() != topo.points.size()) {
    Witness w;
    w.detail = "open of S is not the full point set";
    return violated(std::move(id), std::move(w));
  }
  ClaimResult phi = verify_phi_preservation(t, mode, cap);
  if (phi.verdict != Verdict::Holds) {
    return violated(std::move(id), phi.witness,
                    "assignment fails to preserve intersection/union");
  }
  if (topo.points.empty()) return vacuous(std::move(id), "no points");
  ClaimResult res = holds(std::move(id));
  res.note = phi.note;
  return res;
}

ClaimResult claim_gamma_omega(const AGTable& t, int cap) {
  return claim_topology(t, SpaceKind::BiIdealSpace, "C11", cap);
}

ClaimResult claim_gamma_ps(const AGTable& t, int cap) {
  return claim_topology(t, SpaceKind::PrimeSpectrum, "C12", cap);
}

// C13: quasi-prime <=> the (Sa)b criterion, for every left ideal.
ClaimResult claim_quasi_prime_criterion(const AGTable& t, int cap) {
  if (left_identities(t).empty()) return not_applicable("C13", "no left identity");
  SubsetFamily lefts = enumerate_subsets_of_kind(t, IdealKind::LeftIdeal, cap);
  for (const ElemSet& p : lefts) {
    const bool qp = is_quasi_prime(t, p, cap).ok;
    const CriterionCheck crit = quasi_prime_criterion(t, p);
    const bool cr = crit.verdict == Verdict::Holds;
    if (qp != cr) {
      Witness w;
      w.sets = {p};
      w.detail = std::string("quasi-prime=") + (qp ? "yes" : "no")
                 + " criterion=" + (cr ? "yes" : "no");
      if (crit.verdict == Verdict::Violated) {
        w.elements = {crit.a, crit.b};
      }
      return violated("C13", std::move(w));
    }
  }
  return holds("C13");
}

// C14: products of two-sided ideals stay two-sided (anti-rectangular).
ClaimResult claim_ideal_product(const AGTable& t, int cap) {
  if (!check_anti_rectangular(t).holds) {
    return not_applicable("C14", "not anti-rectangular");
  }
  SubsetFamily fam = enumerate_subsets_of_kind(t, IdealKind::TwoSidedIdeal, cap);
  for (const ElemSet& a : fam) {
    for (const ElemSet& b : fam) {
      const ElemSet prod = set_product(t, a, b);
      if (!is_ideal_kind(t, prod, IdealKind::TwoSidedIdeal).ok) {
        Witness w;
        w.sets = {a, b, prod};
        w.detail = "product of ideals is not an ideal";
        return violated("C14", std::move(w));
      }
    }
  }
  return holds("C14");
}

// C15: left and right ideals coincide over all nonempty subsets
// (anti-rectangular).
ClaimResult claim_left_right_coincide(const AGTable& t, int cap) {
  if (!check_anti_rectangular(t).holds) {
    return not_applicable("C15", "not anti-rectangular");
  }
  const int n = t.order();
  int effective_cap = std::min(cap, kHardSubsetCap);
  if (n > effective_cap) return not_applicable("C15", "enumeration cap exceeded");
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    ElemSet x(n, m);
    const bool left = is_ideal_kind(t, x, IdealKind::LeftIdeal).ok;
    const bool right = is_ideal_kind(t, x, IdealKind::RightIdeal).ok;
    if (left != right) {
      Witness w;
      w.sets = {x};
      w.detail = std::string("left=") + (left ? "yes" : "no") + " right="
                 + (right ? "yes" : "no");
      return violated("C15", std::move(w));
    }
  }
  return holds("C15");
}

// C16: H(a) = {x : (xa)x = a} lies inside every ideal containing a
// (anti-rectangular). The fixpoint variant {x : (xa)x = x} is reported in
// the note.
ClaimResult claim_h_set_containment(const AGTable& t, int cap) {
  if (!check_anti_rectangular(t).holds) {
    return not_applicable("C16", "not anti-rectangular");
  }
  SubsetFamily fam = enumerate_subsets_of_kind(t, IdealKind::TwoSidedIdeal, cap);
  bool variant_ok = true;
  for (const ElemSet& ideal : fam) {
    for (int a : ideal.elements()) {
      if (!h_set_fixpoint(t, a).subset_of(ideal)) variant_ok = false;
    }
  }
  for (const ElemSet& ideal : fam) {
    for (int a : ideal.elements()) {
      const ElemSet h = h_set(t, a);
      if (!h.subset_of(ideal)) {
        Witness w;
        w.sets = {ideal, h};
        w.elements = {a};
        w.detail = "H(a) escapes an ideal containing a";
        return violated("C16", std::move(w),
                        variant_ok ? "fixpoint variant holds"
                                   : "fixpoint variant also fails");
      }
    }
  }
  ClaimResult res = holds("C16");
  res.note = variant_ok ? "fixpoint variant holds" : "fixpoint variant fails";
  return res;
}

ClaimResult claim_fully_idempotent_equivalence(const AGTable& t, int cap) {
  if (!check_anti_rectangular(t).holds) {
    return not_applicable("C17", "not anti-rectangular");
  }
  return claim_idempotency_equivalence(t, IdealKind::TwoSidedIdeal, "C17", cap);
}

ClaimResult claim_ideal_prime_equivalence(const AGTable& t, int cap) {
  if (!check_anti_rectangular(t).holds) {
    return not_applicable("C18", "not anti-rectangular");
  }
  return claim_prime_equivalence(t, IdealKind::TwoSidedIdeal, "C18", cap);
}

// C19: the principal sets S*a, a*S, (S*a)*S are bi-ideals and the product
// identity battery holds.
ClaimResult claim_principal_battery(const AGTable& t, int) {
  if (left_identities(t).empty()) return not_applicable("C19", "no left identity");
  for (int a = 0; a < t.order(); ++a) {
    PrincipalIdeals pr = principal_ideals(t, a);
    for (const ElemSet* s : {&pr.left, &pr.right, &pr.two_sided}) {
      if (!is_ideal_kind(t, *s, IdealKind::BiIdeal).ok) {
        Witness w;
        w.sets = {*s};
        w.elements = {a};
        w.detail = "principal set is not a bi-ideal";
        return violated("C19", std::move(w));
      }
    }
  }
  for (const ClaimResult& ident : check_principal_identities(t)) {
    if (ident.verdict == Verdict::Violated) {
      Witness w = ident.witness;
      w.detail = "identity fails: " + ident.claim;
      return violated("C19", std::move(w));
    }
  }
  return holds("C19");
}

// C20: idempotent bi-ideals form a semilattice under the product, and
// (C*S)*C is again one for every idempotent bi-ideal C.
ClaimResult claim_idempotent_semilattice(const AGTable& t, int cap) {
  if (left_identities(t).empty()) return not_applicable("C20", "no left identity");
  SubsetFamily bis = enumerate_subsets_of_kind(t, IdealKind::BiIdeal, cap);
  SubsetFamily idem;
  for (const ElemSet& b : bis) {
    if (set_product(t, b, b) == b) idem.push_back(b);
  }
  if (idem.empty()) return vacuous("C20", "no idempotent bi-ideals");
  FamilyProperties props = family_properties(t, IdealKind::BiIdeal, cap);
  if (!props.semilattice_under_product) {
    Witness w;
    w.detail = "idempotent bi-ideals do not form a semilattice under product";
    return violated("C20", std::move(w));
  }
  auto in_idem = [&idem](const ElemSet& x) {
    return std::binary_search(idem.begin(), idem.end(), x);
  };
  const ElemSet s = ElemSet::full(t.order());
  for (const ElemSet& c : idem) {
    const ElemSet csc = set_product(t, set_product(t, c, s), c);
    if (!in_idem(csc)) {
      Witness w;
      w.sets = {c, csc};
      w.detail = "(C*S)*C is not an idempotent bi-ideal";
      return violated("C20", std::move(w));
    }
  }
  return holds("C20");
}

// C21: every right ideal is a bi-ideal. No hypothesis.
ClaimResult claim_right_is_bi(const AGTable& t, int cap) {
  SubsetFamily rights = enumerate_subsets_of_kind(t, IdealKind::RightIdeal, cap);
  for (const ElemSet& r : rights) {
    KindCheck chk = is_ideal_kind(t, r, IdealKind::BiIdeal);
    if (!chk.ok) {
      Witness w;
      w.sets = {r};
      w.detail = "right ideal is not a bi-ideal";
      return violated("C21", std::move(w));
    }
  }
  return holds("C21");
}

// C22: pairwise intersections of bi-ideals are empty or bi-ideals (iterated
// pairwise intersection covers arbitrary families).
ClaimResult claim_bi_intersection(const AGTable& t, int cap) {
  SubsetFamily bis = enumerate_subsets_of_kind(t, IdealKind::BiIdeal, cap);
  for (size_t i = 0; i < bis.size(); ++i) {
    for (size_t j = i; j < bis.size(); ++j) {
      ElemSet inter = bis[i].intersect(bis[j]);
      if (inter.empty()) continue;
      if (!is_ideal_kind(t, inter, IdealKind::BiIdeal).ok) {
        Witness w;
        w.sets = {bis[i], bis[j], inter};
        w.detail = "nonempty intersection of bi-ideals is not a bi-ideal";
        return violated("C22", std::move(w));
      }
    }
  }
  return holds("C22");
}

// C23: the intersection of all prime bi-ideals is a semiprime bi-ideal.
ClaimResult claim_prime_intersection_semiprime(const AGTable& t, int cap) {
  SubsetFamily bis = enumerate_subsets_of_kind(t, IdealKind::BiIdeal, cap);
  SubsetFamily primes;
  for (const ElemSet& b : bis) {
    if (is_prime_member(t, b, IdealKind::BiIdeal, cap).ok) primes.push_back(b);
  }
  if (primes.empty()) return vacuous("C23", "no prime bi-ideals");
  ElemSet inter = primes.front();
  for (const ElemSet& p : primes) inter = inter.intersect(p);
  if (inter.empty()) return vacuous("C23", "intersection of primes is empty");
  if (!is_ideal_kind(t, inter, IdealKind::BiIdeal).ok) {
    Witness w;
    w.sets = {inter};
    w.detail = "intersection of prime bi-ideals is not a bi-ideal";
    return violated("C23", std::move(w));
  }
  MemberCheck chk = is_semiprime_member(t, inter, IdealKind::BiIdeal, cap);
  if (!chk.ok) {
    Witness w;
    w.sets = {inter};
    w.sets.insert(w.sets.end(), chk.witness.begin(), chk.witness.end());
    w.detail = "intersection of prime bi-ideals is not semiprime";
    return violated("C23", std::move(w));
  }
  return holds("C23");
}

// C24: B*B is a bi-ideal with B^2 <= S*B^2 = B^2*S under a left identity.
ClaimResult claim_square_bi(const AGTable& t, int cap) {
  if (left_identities(t).empty()) return not_applicable("C24", "no left identity");
  SubsetFamily bis = enumerate_subsets_of_kind(t, IdealKind::BiIdeal, cap);
  const ElemSet s = ElemSet::full(t.order());
  for (const ElemSet& b : bis) {
    const ElemSet b2 = set_product(t, b, b);
    if (!is_ideal_kind(t, b2, IdealKind::BiIdeal).ok) {
      Witness w;
      w.sets = {b, b2};
      w.detail = "B*B is not a bi-ideal";
      return violated("C24", std::move(w));
    }
    const ElemSet sb2 = set_product(t, s, b2);
    const ElemSet b2s = set_product(t, b2, s);
    if (!b2.subset_of(sb2) || sb2 != b2s) {
      Witness w;
      w.sets = {b, b2, sb2, b2s};
      w.detail = "B^2 <= S*B^2 = B^2*S fails";
      return violated("C24", std::move(w));
    }
  }
  return holds("C24");
}

// C25: anti-rectangular bundle: S = S*S, S*I = I*S for every ideal, and
// quasi-prime left ideals are prime two-sided ideals.
ClaimResult claim_anti_rectangular_remarks(const AGTable& t, int cap) {
  if (!check_anti_rectangular(t).holds) {
    return not_applicable("C25", "not anti-rectangular");
  }
  const ElemSet s = ElemSet::full(t.order());
  if (set_product(t, s, s) != s) {
    Witness w;
    w.sets = {set_product(t, s, s)};
    w.detail = "S*S differs from S";
    return violated("C25", std::move(w));
  }
  SubsetFamily ideals = enumerate_subsets_of_kind(t, IdealKind::TwoSidedIdeal, cap);
  for (const ElemSet& ideal : ideals) {
    if (set_product(t, s, ideal) != set_product(t, ideal, s)) {
      Witness w;
      w.sets = {ideal};
      w.detail = "S*I differs from I*S";
      return violated("C25", std::move(w));
    }
  }
  SubsetFamily lefts = enumerate_subsets_of_kind(t, IdealKind::LeftIdeal, cap);
  for (const ElemSet& p : lefts) {
    if (!is_quasi_prime(t, p, cap).ok) continue;
    if (!is_ideal_kind(t, p, IdealKind::TwoSidedIdeal).ok) {
      Witness w;
      w.sets = {p};
      w.detail = "quasi-prime left ideal is not two-sided";
      return violated("C25", std::move(w));
    }
    MemberCheck chk = is_prime_member(t, p, IdealKind::TwoSidedIdeal, cap);
    if (!chk.ok) {
      Witness w;
      w.sets = {p};
      w.sets.insert(w.sets.end(), chk.witness.begin(), chk.witness.end());
      w.detail = "quasi-prime left ideal is not prime";
      return violated("C25", std::move(w));
    }
  }
  return holds("C25");
}

// C26: the square of a left ideal is a two-sided ideal. Checked without a
// hypothesis; instances without a left identity do violate it, and those
// verdicts are reported rather than asserted.
ClaimResult claim_left_square_ideal(const AGTable& t, int cap) {
  SubsetFamily lefts = enumerate_subsets_of_kind(t, IdealKind::LeftIdeal, cap);
  for (const ElemSet& ideal : lefts) {
    const ElemSet sq = set_product(t, ideal, ideal);
    if (!is_ideal_kind(t, sq, IdealKind::TwoSidedIdeal).ok) {
      Witness w;
      w.sets = {ideal, sq};
      w.detail = "I*I is not a two-sided ideal";
      return violated("C26", std::move(w),
                      left_identities(t).empty() ? "instance has no left identity"
                                                 : "");
    }
  }
  return holds("C26");
}

using ClaimFn = ClaimResult (*)(const AGTable&, int);

struct ClaimEntry {
  ClaimInfo info;
  ClaimFn   fn;
};

const std::vector<ClaimEntry>& entries() {
  static const std::vector<ClaimEntry> table = {
      {{"C1", "medial law (ab)(cd) = (ac)(bd)"}, claim_medial},
      {{"C2", "paramedial law (ab)(cd) = (db)(ca)", true}, claim_paramedial3},
      {{"C3", "position-anchored permutation identity on power products", true},
       claim_permutation_identity},
      {{"C4", "absorbing zero: 0s = s0 = 0", false, true}, claim_zero_absorption},
      {{"C5", "B*T and (T*T)*B are bi-ideals", true}, claim_products_with_left_ideal},
      {{"C6", "product of two bi-ideals is a bi-ideal", true}, claim_bi_product},
      {{"C7", "idempotent bi-ideal is a two-sided ideal", true},
       claim_idempotent_bi_is_ideal},
      {{"C8", "proper bi-ideals exclude left identities", true},
       claim_proper_excludes_identity},
      {{"C9", "all idempotent <=> A&B = A*B <=> product semilattice (bi-ideals)",
        true},
       claim_bi_idempotency_equivalence},
      {{"C10", "all bi-ideals prime <=> all idempotent and chain-ordered", true},
       claim_bi_prime_equivalence},
      {{"C11", "hull-kernel topology on strongly irreducible proper bi-ideals",
        false, true},
       claim_gamma_omega},
      {{"C12", "spectral topology on proper prime ideals", false, true},
       claim_gamma_ps},
      {{"C13", "quasi-prime <=> (Sa)b criterion", true},
       claim_quasi_prime_criterion},
      {{"C14", "product of ideals is an ideal", false, false, true},
       claim_ideal_product},
      {{"C15", "left ideal <=> right ideal over all subsets", false, false, true},
       claim_left_right_coincide},
      {{"C16", "H(a) lies in every ideal containing a", false, false, true},
       claim_h_set_containment},
      {{"C17", "fully idempotent <=> A&B = A*B <=> product semilattice (ideals)",
        false, false, true},
       claim_fully_idempotent_equivalence},
      {{"C18", "all ideals prime <=> all idempotent and chain-ordered",
        false, false, true},
       claim_ideal_prime_equivalence},
      {{"C19", "principal sets are bi-ideals and product identities hold", true},
       claim_principal_battery},
      {{"C20", "idempotent bi-ideals form a semilattice", true},
       claim_idempotent_semilattice},
      {{"C21", "every right ideal is a bi-ideal"}, claim_right_is_bi},
      {{"C22", "intersections of bi-ideals are empty or bi-ideals"},
       claim_bi_intersection},
      {{"C23", "intersection of all prime bi-ideals is semiprime"},
       claim_prime_intersection_semiprime},
      {{"C24", "B*B is a bi-ideal with B^2 <= S*B^2 = B^2*S", true},
       claim_square_bi},
      {{"C25", "S = S^2, S*I = I*S, quasi-prime implies prime", false, false, true},
       claim_anti_rectangular_remarks},
      {{"C26", "square of a left ideal is a two-sided ideal"},
       claim_left_square_ideal},
  };
  return table;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const ClaimEntry& e : entries()) {
      out.push_back(e.info);
    }
    return out;
  }();
  return infos;
}

bool is_known_claim(const std::string& id) {
  for (const ClaimEntry& e : entries()) {
    if (e.info.id == id) return true;
  }
  return false;
}

ClaimResult run_claim(const AGTable& t, const std::string& claim_id,
                      int subset_cap) {
  require_validated(t);
  for (const ClaimEntry& e : entries()) {
    if (e.info.id == claim_id) {
      try {
        return e.fn(t, subset_cap);
      } catch (const CapError& err) {
        return not_applicable(claim_id,
                              std::string("enumeration cap exceeded: ") + err.what());
      }
    }
  }
  throw std::invalid_argument("unknown claim id: " + claim_id);
}

CorpusReport run_corpus(std::span<const AGTable> corpus,
                        const std::optional<std::vector<std::string>>& filter,
                        int subset_cap) {
  std::vector<std::string> ids;
  if (filter) {
    for (const std::string& id : *filter) {
      if (!is_known_claim(id)) {
        throw std::invalid_argument("unknown claim id: " + id);
      }
      ids.push_back(id);
    }
  } else {
    for (const ClaimInfo& info : claim_registry()) {
      ids.push_back(info.id);
    }
  }
  CorpusReport report;
  for (const std::string& id : ids) {
    report.claims[id];  // materialize in claim order
  }
  for (const AGTable& t : corpus) {
    ++report.corpus_size;
    for (const std::string& id : ids) {
      ClaimResult res = run_claim(t, id, subset_cap);
      ClaimTally& tally = report.claims[id];
      switch (res.verdict) {
        case Verdict::Holds: ++tally.holds; break;
        case Verdict::Violated:
          ++tally.violated;
          tally.witnesses.push_back({emit_table(t), res.witness, res.note});
          break;
        case Verdict::NotApplicable: ++tally.not_applicable; break;
        case Verdict::Vacuous: ++tally.vacuous; break;
      }
    }
  }
  return report;
}

}  // namespace agtop
