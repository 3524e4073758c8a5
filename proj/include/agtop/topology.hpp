#ifndef AGTOP_TOPOLOGY_HPP_
#define AGTOP_TOPOLOGY_HPP_

#include <string>
#include <vector>

#include "agtop/elem_set.hpp"
#include "agtop/ideals.hpp"
#include "agtop/table.hpp"

namespace agtop {

// One open set: point indices (ascending) plus every generating subset whose
// hull-kernel image equals it.
struct OpenSet {
  std::vector<int>     members;
  std::vector<ElemSet> labels;
};

// A finite topology whose points are themselves subsets of the table's
// universe (strongly irreducible proper bi-ideals, or proper prime ideals).
// Opens are deduplicated and sorted by ascending point-index mask; the empty
// set and the full point set are always present.
struct FiniteTopology {
  std::vector<ElemSet> points;
  std::vector<OpenSet> opens;
};

enum class SpaceKind {
  BiIdealSpace,   // points: strongly irreducible proper bi-ideals
  PrimeSpectrum,  // points: proper prime two-sided ideals containing 0
};

const char* to_string(SpaceKind mode);

// The strongly irreducible proper bi-ideals of t. Requires a validated
// table with a zero (NotApplicableError otherwise); may be empty.
SubsetFamily omega_points(const AGTable& t, int subset_cap = kDefaultSubsetCap);

// The proper prime two-sided ideals containing the zero.
SubsetFamily spectrum_points(const AGTable& t, int subset_cap = kDefaultSubsetCap);

// Hull-kernel image of one generator: {j : b is not a subset of points[j]}.
std::vector<int> open_of(const ElemSet& b, const std::vector<ElemSet>& points);

// The topology generated on omega_points by O_B over every bi-ideal B.
FiniteTopology build_gamma_omega(const AGTable& t, int subset_cap = kDefaultSubsetCap);

// The topology generated on spectrum_points by Theta_I over every two-sided
// ideal I.
FiniteTopology build_gamma_ps(const AGTable& t, int subset_cap = kDefaultSubsetCap);

// Axioms for a finite topology: empty and full point set present, opens
// closed under pairwise intersection and union. Witness names the first
// violating pair.
ClaimResult verify_topology(const FiniteTopology& topo);

// Every open equals the point set regenerated from each of its labels.
bool labels_coherent(const FiniteTopology& topo);

// The generator-to-open assignment preserves intersections and unions:
// for generators with nonempty intersection, O_{B1 & B2} = O_{B1} & O_{B2};
// for every nonempty sub-collection, O over the generated closure of the
// union equals the union of the opens. Sub-collections are exhausted when
// the generating family has at most max_exhaustive members, otherwise all
// pairs plus the full collection are checked and the note records it.
ClaimResult verify_phi_preservation(const AGTable& t, SpaceKind mode,
                                    int subset_cap = kDefaultSubsetCap,
                                    int max_exhaustive = 12);

// Specialization preorder in DOT form: edge J -> K iff every open
// containing J contains K.
std::string topology_to_dot(const FiniteTopology& topo);

}  // namespace agtop

#endif  // AGTOP_TOPOLOGY_HPP_
