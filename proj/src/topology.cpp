#include "agtop/topology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace agtop {

const char* to_string(SpaceKind mode) {
  switch (mode) {
    case SpaceKind::BiIdealSpace: return "omega";
    case SpaceKind::PrimeSpectrum: return "spectrum";
  }
  return "?";
}

namespace {

int require_zero(const AGTable& t) {
  auto z = find_zero(t);
  if (!z) {
    throw NotApplicableError("no zero");
  }
  return *z;
}

IdealKind generating_kind(SpaceKind mode) {
  return mode == SpaceKind::BiIdealSpace ? IdealKind::BiIdeal
                                         : IdealKind::TwoSidedIdeal;
}

SubsetFamily points_of(const AGTable& t, SpaceKind mode, int subset_cap) {
  return mode == SpaceKind::BiIdealSpace ? omega_points(t, subset_cap)
                                         : spectrum_points(t, subset_cap);
}

// Point-index set as a mask; point counts stay far below 64 only for tiny
// instances, so opens use uint64 masks over point indices with the point
// count capped by the subset cap (at most 2^cap points is impossible anyway:
// points are distinct subsets, and families at cap 20 stay well under 64
// only for the orders the topology is used at).
using PointMask = std::uint64_t;

PointMask open_mask(const ElemSet& b, const std::vector<ElemSet>& points) {
  PointMask m = 0;
  for (size_t j = 0; j < points.size(); ++j) {
    if (!b.subset_of(points[j])) {
      m |= PointMask{1} << j;
    }
  }
  return m;
}

std::vector<int> mask_to_members(PointMask m, size_t npoints) {
  std::vector<int> out;
  for (size_t j = 0; j < npoints; ++j) {
    if ((m >> j) & 1u) {
      out.push_back(static_cast<int>(j));
    }
  }
  return out;
}

FiniteTopology build_space(const AGTable& t, SpaceKind mode, int subset_cap) {
  require_validated(t);
  require_zero(t);
  FiniteTopology topo;
  topo.points = points_of(t, mode, subset_cap);
  if (topo.points.size() > 62) {
    throw CapError("too many topology points for the open-set mask");
  }
  SubsetFamily generators = enumerate_subsets_of_kind(t, generating_kind(mode),
                                                      subset_cap);
  std::map<PointMask, std::vector<ElemSet>> opens;
  for (const ElemSet& b : generators) {
    opens[open_mask(b, topo.points)].push_back(b);
  }
  // The hull-kernel image of the least generator is empty and the image of
  // S is the whole point set; for a table with zero, {0} and S are always
  // generators, so both axiom-0 opens exist already. Degenerate case: no
  // points at all collapses every open to the empty set.
  for (auto& [mask, labels] : opens) {
    OpenSet open;
    open.members = mask_to_members(mask, topo.points.size());
    std::sort(labels.begin(), labels.end());
    open.labels = labels;
    topo.opens.push_back(std::move(open));
  }
  return topo;
}

}  // namespace

SubsetFamily omega_points(const AGTable& t, int subset_cap) {
  require_validated(t);
  require_zero(t);
  SubsetFamily bi = enumerate_subsets_of_kind(t, IdealKind::BiIdeal, subset_cap);
  const ElemSet full = ElemSet::full(t.order());
  SubsetFamily out;
  for (const ElemSet& b : bi) {
    if (b == full) {
      continue;
    }
    if (is_strongly_irreducible(t, b, IdealKind::BiIdeal, subset_cap).ok) {
      out.push_back(b);
    }
  }
  return out;
}

SubsetFamily spectrum_points(const AGTable& t, int subset_cap) {
  require_validated(t);
  const int z = require_zero(t);
  SubsetFamily ideals = enumerate_subsets_of_kind(t, IdealKind::TwoSidedIdeal,
                                                  subset_cap);
  const ElemSet full = ElemSet::full(t.order());
  SubsetFamily out;
  for (const ElemSet& p : ideals) {
    if (p == full || !p.contains(z)) {
      continue;
    }
    if (is_prime_member(t, p, IdealKind::TwoSidedIdeal, subset_cap).ok) {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<int> open_of(const ElemSet& b, const std::vector<ElemSet>& points) {
  std::vector<int> out;
  for (size_t j = 0; j < points.size(); ++j) {
    if (!b.subset_of(points[j])) {
      out.push_back(static_cast<int>(j));
    }
  }
  return out;
}

FiniteTopology build_gamma_omega(const AGTable& t, int subset_cap) {
  return build_space(t, SpaceKind::BiIdealSpace, subset_cap);
}

FiniteTopology build_gamma_ps(const AGTable& t, int subset_cap) {
  return build_space(t, SpaceKind::PrimeSpectrum, subset_cap);
}

namespace {

PointMask members_mask(const OpenSet& open) {
  PointMask m = 0;
  for (int j : open.members) {
    m |= PointMask{1} << j;
  }
  return m;
}

std::string mask_string(PointMask m, size_t npoints) {
  std::string out = "{";
  bool first = true;
  for (size_t j = 0; j < npoints; ++j) {
    if ((m >> j) & 1u) {
      if (!first) out += ',';
      out += std::to_string(j);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

ClaimResult verify_topology(const FiniteTopology& topo) {
  ClaimResult res;
  res.claim = "topology-axioms";
  res.verdict = Verdict::Holds;
  const size_t npoints = topo.points.size();
  if (npoints > 62) {
    throw CapError("too many topology points for the open-set mask");
  }
  const PointMask full =
      npoints == 0 ? 0 : ((PointMask{1} << npoints) - 1);

  std::vector<PointMask> masks;
  masks.reserve(topo.opens.size());
  for (const OpenSet& o : topo.opens) {
    masks.push_back(members_mask(o));
  }
  std::vector<PointMask> sorted = masks;
  std::sort(sorted.begin(), sorted.end());
  auto present = [&sorted](PointMask m) {
    return std::binary_search(sorted.begin(), sorted.end(), m);
  };

  if (!present(0)) {
    res.verdict = Verdict::Violated;
    res.witness.detail = "empty set missing from opens";
    return res;
  }
  if (!present(full)) {
    res.verdict = Verdict::Violated;
    res.witness.detail = "full point set missing from opens";
    return res;
  }
  for (size_t i = 0; i < masks.size(); ++i) {
    for (size_t j = i; j < masks.size(); ++j) {
      if (!present(masks[i] & masks[j])) {
        res.verdict = Verdict::Violated;
        res.witness.detail = "intersection of opens " + mask_string(masks[i], npoints)
                             + " and " + mask_string(masks[j], npoints)
                             + " is not open";
        res.witness.elements = {static_cast<int>(i), static_cast<int>(j)};
        return res;
      }
      if (!present(masks[i] | masks[j])) {
        res.verdict = Verdict::Violated;
        res.witness.detail = "union of opens " + mask_string(masks[i], npoints)
                             + " and " + mask_string(masks[j], npoints)
                             + " is not open";
        res.witness.elements = {static_cast<int>(i), static_cast<int>(j)};
        return res;
      }
    }
  }
  return res;
}

bool labels_coherent(const FiniteTopology& topo) {
  for (const OpenSet& open : topo.opens) {
    if (open.labels.empty()) {
      return false;
    }
    for (const ElemSet& label : open.labels) {
      if (open_of(label, topo.points) != open.members) {
        return false;
      }
    }
  }
  return true;
}

ClaimResult verify_phi_preservation(const AGTable& t, SpaceKind mode,
                                    int subset_cap, int max_exhaustive) {
  require_validated(t);
  ClaimResult res;
  res.claim = std::string("phi-preservation-") + to_string(mode);
  res.verdict = Verdict::Holds;

  const std::vector<ElemSet> points = points_of(t, mode, subset_cap);
  const IdealKind kind = generating_kind(mode);
  const SubsetFamily generators = enumerate_subsets_of_kind(t, kind, subset_cap);
  const size_t k = generators.size();
  const size_t npoints = points.size();

  std::vector<PointMask> gen_masks(k);
  for (size_t i = 0; i < k; ++i) {
    gen_masks[i] = open_mask(generators[i], points);
  }

  // Finite intersections, pairwise.
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i; j < k; ++j) {
      ElemSet inter = generators[i].intersect(generators[j]);
      if (inter.empty()) {
        continue;
      }
      if (open_mask(inter, points) != (gen_masks[i] & gen_masks[j])) {
        res.verdict = Verdict::Violated;
        res.witness.sets = {generators[i], generators[j]};
        res.witness.detail = "open of intersection differs from intersection of opens";
        return res;
      }
    }
  }

  // Unions over sub-collections, via the generated closure of the union.
  auto check_collection = [&](const std::vector<size_t>& idx) -> bool {
    ElemSet u(t.order());
    PointMask expect = 0;
    for (size_t i : idx) {
      u = u.unite(generators[i]);
      expect |= gen_masks[i];
    }
    ElemSet hull = generated_closure(t, u, kind, subset_cap);
    return open_mask(hull, points) == expect;
  };

  const bool exhaustive = k <= static_cast<size_t>(max_exhaustive);
  if (exhaustive) {
    for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << k); ++sel) {
      std::vector<size_t> idx;
      for (size_t i = 0; i < k; ++i) {
        if ((sel >> i) & 1u) {
          idx.push_back(i);
        }
      }
      if (!check_collection(idx)) {
        res.verdict = Verdict::Violated;
        for (size_t i : idx) {
          res.witness.sets.push_back(generators[i]);
        }
        res.witness.detail = "open of generated union differs from union of opens";
        return res;
      }
    }
    res.note = "exhaustive sub-collections";
  } else {
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = i; j < k; ++j) {
        if (!check_collection({i, j})) {
          res.verdict = Verdict::Violated;
          res.witness.sets = {generators[i], generators[j]};
          res.witness.detail = "open of generated union differs from union of opens";
          return res;
        }
      }
    }
    std::vector<size_t> all(k);
    for (size_t i = 0; i < k; ++i) all[i] = i;
    if (!check_collection(all)) {
      res.verdict = Verdict::Violated;
      res.witness.detail = "open of generated union of the full family differs";
      return res;
    }
    res.note = "checked pairs + full only";
  }
  (void)npoints;
  return res;
}

std::string topology_to_dot(const FiniteTopology& topo) {
  const size_t npoints = topo.points.size();
  std::vector<PointMask> masks;
  for (const OpenSet& o : topo.opens) {
    masks.push_back(members_mask(o));
  }
  std::string out = "digraph specialization {\n";
  for (size_t j = 0; j < npoints; ++j) {
    out += "  " + std::to_string(j) + " [label=\"" + topo.points[j].to_string()
           + "\"];\n";
  }
  for (size_t j = 0; j < npoints; ++j) {
    for (size_t kk = 0; kk < npoints; ++kk) {
      if (j == kk) {
        continue;
      }
      bool every = true;
      for (PointMask m : masks) {
        if (((m >> j) & 1u) && !((m >> kk) & 1u)) {
          every = false;
          break;
        }
      }
      if (every) {
        out += "  " + std::to_string(j) + " -> " + std::to_string(kk) + ";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace agtop
