#ifndef AGTOP_JSON_IO_HPP_
#define AGTOP_JSON_IO_HPP_

#include <json.hpp>

#include "agtop/claims.hpp"
#include "agtop/elem_set.hpp"
#include "agtop/ideals.hpp"
#include "agtop/search.hpp"
#include "agtop/topology.hpp"

namespace agtop {

// All emitters sort sets and keep lists ascending so output is byte-stable
// across runs.

nlohmann::json to_json(const ElemSet& s);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const ClaimResult& res);
nlohmann::json to_json(const FiniteTopology& topo);
nlohmann::json to_json(const CensusCounts& counts);
nlohmann::json to_json(const CorpusReport& report);

}  // namespace agtop

#endif  // AGTOP_JSON_IO_HPP_
