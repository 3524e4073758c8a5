#include "agtop/json_io.hpp"

namespace agtop {

using nlohmann::json;

json to_json(const ElemSet& s) { return json(s.elements()); }

json to_json(const Witness& w) {
  json out = json::object();
  if (!w.elements.empty()) out["elements"] = w.elements;
  if (!w.sets.empty()) {
    json sets = json::array();
    for (const ElemSet& s : w.sets) sets.push_back(to_json(s));
    out["sets"] = sets;
  }
  if (!w.detail.empty()) out["detail"] = w.detail;
  return out;
}

json to_json(const ClaimResult& res) {
  json out;
  out["claim"] = res.claim;
  out["verdict"] = to_string(res.verdict);
  if (!res.witness.empty()) out["witness"] = to_json(res.witness);
  if (!res.note.empty()) out["note"] = res.note;
  return out;
}

json to_json(const FiniteTopology& topo) {
  json points = json::array();
  for (const ElemSet& p : topo.points) points.push_back(to_json(p));
  json opens = json::array();
  for (const OpenSet& o : topo.opens) {
    json open;
    open["members"] = o.members;
    json labels = json::array();
    for (const ElemSet& l : o.labels) labels.push_back(to_json(l));
    open["labels"] = labels;
    opens.push_back(open);
  }
  json out;
  out["points"] = points;
  out["opens"] = opens;
  return out;
}

json to_json(const CensusCounts& c) {
  json out;
  out["total"] = c.total;
  out["withLeftIdentity"] = c.with_left_identity;
  out["withZero"] = c.with_zero;
  out["antiRectangular"] = c.anti_rectangular;
  out["associative"] = c.associative;
  out["nonAssociative"] = c.non_associative;
  return out;
}

json to_json(const CorpusReport& report) {
  json claims = json::object();
  for (const auto& [id, tally] : report.claims) {
    json entry;
    entry["holds"] = tally.holds;
    entry["violated"] = tally.violated;
    entry["notApplicable"] = tally.not_applicable;
    entry["vacuous"] = tally.vacuous;
    json witnesses = json::array();
    for (const ViolationRecord& rec : tally.witnesses) {
      json w;
      w["table"] = rec.table_agt;
      w["witness"] = to_json(rec.witness);
      if (!rec.note.empty()) w["note"] = rec.note;
      witnesses.push_back(w);
    }
    entry["witnesses"] = witnesses;
    claims[id] = entry;
  }
  json out;
  out["claims"] = claims;
  out["corpusSize"] = report.corpus_size;
  return out;
}

}  // namespace agtop
