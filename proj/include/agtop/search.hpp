#ifndef AGTOP_SEARCH_HPP_
#define AGTOP_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "agtop/table.hpp"

namespace agtop {

// What to enumerate: all Cayley tables of the given order satisfying the
// left invertive law, optionally filtered, in lexicographic order over the
// flattened tables. With up_to_isomorphism only canonical representatives
// (tables equal to their canonical form) are emitted.
struct SearchSpec {
  int  order                    = 1;
  bool require_left_identity    = false;
  bool require_zero             = false;
  bool require_anti_rectangular = false;
  bool up_to_isomorphism        = false;
  std::optional<std::uint64_t> limit;
};

// Backtracking search over table cells in row-major order with incremental
// law checks on every fully determined triple. The visitor returns false to
// stop early; emission order is deterministic.
void enumerate_ag_groupoids(const SearchSpec& spec,
                            const std::function<bool(const AGTable&)>& visit);

std::vector<AGTable> collect_ag_groupoids(const SearchSpec& spec);

struct CensusCounts {
  std::uint64_t total              = 0;
  std::uint64_t with_left_identity = 0;
  std::uint64_t with_zero          = 0;
  std::uint64_t anti_rectangular   = 0;
  std::uint64_t associative        = 0;
  std::uint64_t non_associative    = 0;
};

// Classification counts over the emitted stream.
CensusCounts census_counts(const SearchSpec& spec);

}  // namespace agtop

#endif  // AGTOP_SEARCH_HPP_
