#include "agtop/ideals.hpp"

#include <algorithm>
#include <cassert>

namespace agtop {

const char* to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::LeftIdeal: return "left";
    case IdealKind::RightIdeal: return "right";
    case IdealKind::TwoSidedIdeal: return "two-sided";
    case IdealKind::SubGroupoid: return "sub-groupoid";
    case IdealKind::BiIdeal: return "bi";
  }
  return "?";
}

std::optional<IdealKind> ideal_kind_from_string(const std::string& s) {
  if (s == "left") return IdealKind::LeftIdeal;
  if (s == "right") return IdealKind::RightIdeal;
  if (s == "two-sided") return IdealKind::TwoSidedIdeal;
  if (s == "sub-groupoid") return IdealKind::SubGroupoid;
  if (s == "bi") return IdealKind::BiIdeal;
  return std::nullopt;
}

namespace {

void require_same_universe(const AGTable& t, const ElemSet& x) {
  if (x.universe_order() != t.order()) {
    throw std::invalid_argument("subset universe does not match table order");
  }
}

void require_nonempty(const ElemSet& x) {
  if (x.empty()) {
    throw EmptySetError("empty subset is not an ideal candidate");
  }
}

void require_subset_cap(const AGTable& t, int subset_cap) {
  int cap = std::min(subset_cap, kHardSubsetCap);
  if (t.order() > cap) {
    throw CapError("subset enumeration capped at order " + std::to_string(cap)
                   + ", table has order " + std::to_string(t.order()));
  }
}

}  // namespace

ElemSet set_product(const AGTable& t, const ElemSet& a, const ElemSet& b) {
  require_same_universe(t, a);
  require_same_universe(t, b);
  ElemSet out(t.order());
  for (int x : a.elements()) {
    for (int y : b.elements()) {
      out.add(t.at(x, y));
    }
  }
  return out;
}

namespace {

// First product of A*B escaping X, scanning factors lexicographically.
std::optional<KindViolation> first_escape(const AGTable& t, const ElemSet& a,
                                          const ElemSet& b, const ElemSet& x) {
  for (int u : a.elements()) {
    for (int v : b.elements()) {
      const int p = t.at(u, v);
      if (!x.contains(p)) {
        return KindViolation{{u, v}, p};
      }
    }
  }
  return std::nullopt;
}

// First product of (X*S)*X escaping X, factors (x1, s, x2).
std::optional<KindViolation> first_bi_escape(const AGTable& t, const ElemSet& x) {
  const int n = t.order();
  for (int x1 : x.elements()) {
    for (int s = 0; s < n; ++s) {
      const int inner = t.at(x1, s);
      for (int x2 : x.elements()) {
        const int p = t.at(inner, x2);
        if (!x.contains(p)) {
          return KindViolation{{x1, s, x2}, p};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

KindCheck is_ideal_kind(const AGTable& t, const ElemSet& x, IdealKind kind) {
  require_validated(t);
  require_same_universe(t, x);
  require_nonempty(x);
  const ElemSet s = ElemSet::full(t.order());
  std::optional<KindViolation> v;
  switch (kind) {
    case IdealKind::LeftIdeal:
      v = first_escape(t, s, x, x);
      break;
    case IdealKind::RightIdeal:
      v = first_escape(t, x, s, x);
      break;
    case IdealKind::TwoSidedIdeal:
      v = first_escape(t, s, x, x);
      if (!v) {
        v = first_escape(t, x, s, x);
      }
      break;
    case IdealKind::SubGroupoid:
      v = first_escape(t, x, x, x);
      break;
    case IdealKind::BiIdeal:
      v = first_escape(t, x, x, x);
      if (!v) {
        v = first_bi_escape(t, x);
      }
      break;
  }
  return {!v.has_value(), v};
}

namespace {

// Cap-checked raw predicate without witness construction, for enumeration
// inner loops. Masks only; no allocation.
bool kind_holds_fast(const AGTable& t, Mask x, IdealKind kind) {
  const int n = t.order();
  auto prod_escapes = [&](Mask lhs, Mask rhs) {
    for (int a = 0; a < n; ++a) {
      if (!((lhs >> a) & 1u)) continue;
      for (int b = 0; b < n; ++b) {
        if (!((rhs >> b) & 1u)) continue;
        if (!((x >> t.at(a, b)) & 1u)) return true;
      }
    }
    return false;
  };
  const Mask full = static_cast<Mask>((Mask{1} << n) - 1);
  switch (kind) {
    case IdealKind::LeftIdeal:
      return !prod_escapes(full, x);
    case IdealKind::RightIdeal:
      return !prod_escapes(x, full);
    case IdealKind::TwoSidedIdeal:
      return !prod_escapes(full, x) && !prod_escapes(x, full);
    case IdealKind::SubGroupoid:
      return !prod_escapes(x, x);
    case IdealKind::BiIdeal: {
      if (prod_escapes(x, x)) return false;
      // (X*S)*X
      Mask xs = 0;
      for (int a = 0; a < n; ++a) {
        if (!((x >> a) & 1u)) continue;
        for (int s = 0; s < n; ++s) {
          xs |= Mask{1} << t.at(a, s);
        }
      }
      return !prod_escapes(xs, x);
    }
  }
  return false;
}

}  // namespace

SubsetFamily enumerate_subsets_of_kind(const AGTable& t, IdealKind kind,
                                       int subset_cap) {
  require_validated(t);
  require_subset_cap(t, subset_cap);
  const int n = t.order();
  SubsetFamily out;
  const Mask end = Mask{1} << n;
  for (Mask m = 1; m < end; ++m) {
    if (kind_holds_fast(t, m, kind)) {
      out.emplace_back(n, m);
    }
  }
  return out;
}

ElemSet generated_closure(const AGTable& t, const ElemSet& x, IdealKind kind,
                          int subset_cap) {
  require_validated(t);
  require_same_universe(t, x);
  require_nonempty(x);
  require_subset_cap(t, subset_cap);
  const ElemSet s = ElemSet::full(t.order());
  ElemSet y = x;
  for (int round = 0; round <= t.order(); ++round) {
    ElemSet z = y;
    switch (kind) {
      case IdealKind::LeftIdeal:
        z = z.unite(set_product(t, s, y));
        break;
      case IdealKind::RightIdeal:
        z = z.unite(set_product(t, y, s));
        break;
      case IdealKind::TwoSidedIdeal:
        z = z.unite(set_product(t, s, y)).unite(set_product(t, y, s));
        break;
      case IdealKind::SubGroupoid:
        z = z.unite(set_product(t, y, y));
        break;
      case IdealKind::BiIdeal:
        z = z.unite(set_product(t, y, y))
             .unite(set_product(t, set_product(t, y, s), y));
        break;
    }
    if (z == y) {
      return y;
    }
    y = z;
  }
  // Each round grows y by at least one element, so n rounds suffice.
  assert(false && "closure failed to stabilize");
  return y;
}

PrincipalIdeals principal_ideals(const AGTable& t, int a) {
  require_validated(t);
  if (a < 0 || a >= t.order()) {
    throw std::invalid_argument("generator outside universe");
  }
  const ElemSet s = ElemSet::full(t.order());
  const ElemSet ga = ElemSet::single(t.order(), a);
  ElemSet left = set_product(t, s, ga);
  ElemSet right = set_product(t, ga, s);
  ElemSet two = set_product(t, left, s);
  return {a, left, right, two};
}

std::vector<ClaimResult> check_principal_identities(const AGTable& t) {
  require_validated(t);
  const int n = t.order();
  std::vector<ClaimResult> out;
  const bool applicable = !left_identities(t).empty();

  struct PairIdentity {
    const char* name;
    bool (*check)(const AGTable&, int, int);
  };
  struct SingleIdentity {
    const char* name;
    bool (*check)(const AGTable&, int);
  };

  static auto L_ = +[](const AGTable& tt, int a) {
    return set_product(tt, ElemSet::full(tt.order()), ElemSet::single(tt.order(), a));
  };
  static auto R_ = +[](const AGTable& tt, int a) {
    return set_product(tt, ElemSet::single(tt.order(), a), ElemSet::full(tt.order()));
  };

  const PairIdentity pair_identities[] = {
      {"<ab>L = <a>L<b>L",
       [](const AGTable& tt, int a, int b) {
         return L_(tt, tt.at(a, b)) == set_product(tt, L_(tt, a), L_(tt, b));
       }},
      {"<ab>R = <a>R<b>R",
       [](const AGTable& tt, int a, int b) {
         return R_(tt, tt.at(a, b)) == set_product(tt, R_(tt, a), R_(tt, b));
       }},
      {"<ab>R = <b>L<a>L",
       [](const AGTable& tt, int a, int b) {
         return R_(tt, tt.at(a, b)) == set_product(tt, L_(tt, b), L_(tt, a));
       }},
      {"<a>L<b>R = <b>L<a>R",
       [](const AGTable& tt, int a, int b) {
         return set_product(tt, L_(tt, a), R_(tt, b))
                == set_product(tt, L_(tt, b), R_(tt, a));
       }},
  };
  const SingleIdentity single_identities[] = {
      {"<a^2>L = <a>L^2",
       [](const AGTable& tt, int a) {
         const int a2 = tt.at(a, a);
         return L_(tt, a2) == set_product(tt, L_(tt, a), L_(tt, a));
       }},
      {"<a^2>R = <a>R^2",
       [](const AGTable& tt, int a) {
         const int a2 = tt.at(a, a);
         return R_(tt, a2) == set_product(tt, R_(tt, a), R_(tt, a));
       }},
      {"<a^2>L = <a^2>R",
       [](const AGTable& tt, int a) {
         const int a2 = tt.at(a, a);
         return L_(tt, a2) == R_(tt, a2);
       }},
      {"<a>L = <a>R for idempotent a",
       [](const AGTable& tt, int a) {
         return tt.at(a, a) != a || L_(tt, a) == R_(tt, a);
       }},
      {"<a>R a^2 = a^2 <a>L",
       [](const AGTable& tt, int a) {
         const ElemSet sq = ElemSet::single(tt.order(), tt.at(a, a));
         return set_product(tt, R_(tt, a), sq) == set_product(tt, sq, L_(tt, a));
       }},
  };

  for (const auto& ident : pair_identities) {
    ClaimResult res;
    res.claim = ident.name;
    if (!applicable) {
      res.verdict = Verdict::NotApplicable;
      res.note = "no left identity";
    } else {
      res.verdict = Verdict::Holds;
      for (int a = 0; a < n && res.verdict == Verdict::Holds; ++a) {
        for (int b = 0; b < n; ++b) {
          if (!ident.check(t, a, b)) {
            res.verdict = Verdict::Violated;
            res.witness.elements = {a, b};
            break;
          }
        }
      }
    }
    out.push_back(std::move(res));
  }
  for (const auto& ident : single_identities) {
    ClaimResult res;
    res.claim = ident.name;
    if (!applicable) {
      res.verdict = Verdict::NotApplicable;
      res.note = "no left identity";
    } else {
      res.verdict = Verdict::Holds;
      for (int a = 0; a < n; ++a) {
        if (!ident.check(t, a)) {
          res.verdict = Verdict::Violated;
          res.witness.elements = {a};
          break;
        }
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

bool is_idempotent_subset(const AGTable& t, const ElemSet& x) {
  require_same_universe(t, x);
  require_nonempty(x);
  return set_product(t, x, x) == x;
}

namespace {

SubsetFamily family_of(const AGTable& t, IdealKind kind, int subset_cap) {
  return enumerate_subsets_of_kind(t, kind, subset_cap);
}

void require_member(const AGTable& t, const ElemSet& p, IdealKind kind) {
  KindCheck chk = is_ideal_kind(t, p, kind);
  if (!chk.ok) {
    throw std::invalid_argument(std::string("subset is not a ")
                                + to_string(kind) + " ideal/member");
  }
}

}  // namespace

MemberCheck is_prime_member(const AGTable& t, const ElemSet& p, IdealKind kind,
                            int subset_cap) {
  require_member(t, p, kind);
  SubsetFamily fam = family_of(t, kind, subset_cap);
  for (const ElemSet& a : fam) {
    for (const ElemSet& b : fam) {
      if (set_product(t, a, b).subset_of(p) && !a.subset_of(p)
          && !b.subset_of(p)) {
        return {false, {a, b}};
      }
    }
  }
  return {true, {}};
}

MemberCheck is_semiprime_member(const AGTable& t, const ElemSet& p,
                                IdealKind kind, int subset_cap) {
  require_member(t, p, kind);
  SubsetFamily fam = family_of(t, kind, subset_cap);
  for (const ElemSet& c : fam) {
    if (set_product(t, c, c).subset_of(p) && !c.subset_of(p)) {
      return {false, {c}};
    }
  }
  return {true, {}};
}

MemberCheck is_strongly_irreducible(const AGTable& t, const ElemSet& p,
                                    IdealKind kind, int subset_cap) {
  require_member(t, p, kind);
  SubsetFamily fam = family_of(t, kind, subset_cap);
  for (const ElemSet& a : fam) {
    for (const ElemSet& b : fam) {
      if (a.intersect(b).subset_of(p) && !a.subset_of(p) && !b.subset_of(p)) {
        return {false, {a, b}};
      }
    }
  }
  return {true, {}};
}

MemberCheck is_quasi_prime(const AGTable& t, const ElemSet& p, int subset_cap) {
  return is_prime_member(t, p, IdealKind::LeftIdeal, subset_cap);
}

CriterionCheck quasi_prime_criterion(const AGTable& t, const ElemSet& p) {
  require_validated(t);
  require_same_universe(t, p);
  require_nonempty(p);
  if (left_identities(t).empty()) {
    return {Verdict::NotApplicable, -1, -1};
  }
  const int n = t.order();
  const ElemSet s = ElemSet::full(n);
  for (int a = 0; a < n; ++a) {
    const ElemSet sa = set_product(t, s, ElemSet::single(n, a));
    for (int b = 0; b < n; ++b) {
      const ElemSet sab = set_product(t, sa, ElemSet::single(n, b));
      if (sab.subset_of(p) && !p.contains(a) && !p.contains(b)) {
        return {Verdict::Violated, a, b};
      }
    }
  }
  return {Verdict::Holds, -1, -1};
}

int sandwich(const AGTable& t, int x, int a) { return t.at(t.at(x, a), x); }

ElemSet sandwich_preimage(const AGTable& t, int a, int target) {
  const int n = t.order();
  ElemSet out(n);
  for (int x = 0; x < n; ++x) {
    if (sandwich(t, x, a) == target) {
      out.add(x);
    }
  }
  return out;
}

ElemSet h_set(const AGTable& t, int a) { return sandwich_preimage(t, a, a); }

ElemSet h_set_fixpoint(const AGTable& t, int a) {
  const int n = t.order();
  ElemSet out(n);
  for (int x = 0; x < n; ++x) {
    if (sandwich(t, x, a) == x) {
      out.add(x);
    }
  }
  return out;
}

FamilyProperties family_properties(const AGTable& t, IdealKind kind,
                                   int subset_cap) {
  SubsetFamily fam = family_of(t, kind, subset_cap);
  FamilyProperties props;

  props.all_idempotent = true;
  for (const ElemSet& x : fam) {
    if (set_product(t, x, x) != x) {
      props.all_idempotent = false;
      break;
    }
  }

  props.totally_ordered = true;
  for (size_t i = 0; i < fam.size() && props.totally_ordered; ++i) {
    for (size_t j = i + 1; j < fam.size(); ++j) {
      if (!fam[i].subset_of(fam[j]) && !fam[j].subset_of(fam[i])) {
        props.totally_ordered = false;
        break;
      }
    }
  }

  auto in_family = [&fam](const ElemSet& x) {
    return std::binary_search(fam.begin(), fam.end(), x);
  };

  props.intersection_closed = true;
  for (size_t i = 0; i < fam.size() && props.intersection_closed; ++i) {
    for (size_t j = i; j < fam.size(); ++j) {
      ElemSet inter = fam[i].intersect(fam[j]);
      if (!inter.empty() && !in_family(inter)) {
        props.intersection_closed = false;
        break;
      }
    }
  }

  // Idempotent members under the setwise product: closed back into the
  // idempotent members, commutative and associative.
  SubsetFamily idem;
  for (const ElemSet& x : fam) {
    if (set_product(t, x, x) == x) {
      idem.push_back(x);
    }
  }
  auto in_idem = [&idem](const ElemSet& x) {
    return std::binary_search(idem.begin(), idem.end(), x);
  };
  props.semilattice_under_product = true;
  for (const ElemSet& a : idem) {
    for (const ElemSet& b : idem) {
      ElemSet ab = set_product(t, a, b);
      if (!in_idem(ab) || ab != set_product(t, b, a)) {
        props.semilattice_under_product = false;
        break;
      }
    }
    if (!props.semilattice_under_product) {
      break;
    }
  }
  if (props.semilattice_under_product) {
    for (const ElemSet& a : idem) {
      for (const ElemSet& b : idem) {
        const ElemSet ab = set_product(t, a, b);
        for (const ElemSet& c : idem) {
          if (set_product(t, ab, c) != set_product(t, a, set_product(t, b, c))) {
            props.semilattice_under_product = false;
            break;
          }
        }
        if (!props.semilattice_under_product) break;
      }
      if (!props.semilattice_under_product) break;
    }
  }
  return props;
}

}  // namespace agtop
