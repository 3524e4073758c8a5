#ifndef AGTOP_CLAIMS_HPP_
#define AGTOP_CLAIMS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agtop/elem_set.hpp"
#include "agtop/table.hpp"

namespace agtop {

// One registry entry. Claims with an unmet hypothesis come back
// NotApplicable; claims whose quantification domain is empty come back
// Vacuous, never Holds.
struct ClaimInfo {
  std::string id;       // "C1" .. "C26"
  std::string summary;  // what the claim states, in set/element terms
  bool needs_left_identity    = false;
  bool needs_zero             = false;
  bool needs_anti_rectangular = false;
};

const std::vector<ClaimInfo>& claim_registry();
bool is_known_claim(const std::string& id);

// Evaluates one claim on one validated table. Unknown ids throw
// std::invalid_argument; enumeration caps surface as NotApplicable with a
// note rather than an error.
ClaimResult run_claim(const AGTable& t, const std::string& claim_id,
                      int subset_cap = kDefaultSubsetCap);

// A Violated verdict recorded with enough context to re-check it.
struct ViolationRecord {
  std::string table_agt;  // the instance, in AGT text form
  Witness     witness;
  std::string note;
};

struct ClaimTally {
  std::uint64_t holds          = 0;
  std::uint64_t violated       = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t vacuous        = 0;
  std::vector<ViolationRecord> witnesses;
};

struct CorpusReport {
  std::map<std::string, ClaimTally> claims;  // keyed by claim id
  std::uint64_t corpus_size = 0;
};

// Runs every claim (or the given subset) over each instance and aggregates.
CorpusReport run_corpus(std::span<const AGTable> corpus,
                        const std::optional<std::vector<std::string>>& filter
                        = std::nullopt,
                        int subset_cap = kDefaultSubsetCap);

}  // namespace agtop

#endif  // AGTOP_CLAIMS_HPP_
