// agtop - inspect finite AG-groupoids: axioms, ideal structure, the
// hull-kernel topologies on bi-ideals and prime ideals, exhaustive
// enumeration, and corpus-level claim verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agtop/claims.hpp"
#include "agtop/ideals.hpp"
#include "agtop/json_io.hpp"
#include "agtop/search.hpp"
#include "agtop/table.hpp"
#include "agtop/topology.hpp"

namespace {

using namespace agtop;
using nlohmann::json;

// Exit statuses: 0 success, 1 usage, 2 parse/format, 3 axiom check failed,
// 4 at least one claim violated, 5 capability cap exceeded.
enum ExitStatus {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kAxiom = 3,
  kViolated = 4,
  kCap = 5,
};

int subset_cap_from_env() {
  const char* env = std::getenv("AGTOP_MAX_N");
  if (!env) return kDefaultSubsetCap;
  try {
    int v = std::stoi(env);
    if (v < 1) return 1;
    return std::min(v, kHardSubsetCap);
  } catch (const std::exception&) {
    return kDefaultSubsetCap;
  }
}

int search_cap_from_env() {
  const char* env = std::getenv("AGTOP_MAX_N");
  if (!env) return kSearchOrderCap;
  try {
    int v = std::stoi(env);
    if (v < 1) return 1;
    return std::min(v, kSearchOrderCap);
  } catch (const std::exception&) {
    return kSearchOrderCap;
  }
}

AGTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(0, "cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string law_line(const AxiomReport& rep) {
  if (rep.holds) return "OK";
  std::string out = "FAIL witness (";
  for (size_t i = 0; i < rep.witness.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rep.witness[i]);
  }
  out += ')';
  return out;
}

int cmd_check(const std::string& file, bool as_json) {
  AGTable t = load_table(file);
  AxiomReport li = check_left_invertive(t);
  AxiomReport medial = check_medial(t);
  AxiomReport pm3 = check_paramedial3(t);
  AxiomReport ar = check_anti_rectangular(t);
  ElemSet ids = left_identities(t);
  std::optional<int> zero = find_zero(t);

  if (as_json) {
    json out;
    auto law = [](const AxiomReport& rep) {
      json j;
      j["holds"] = rep.holds;
      if (!rep.holds) j["witness"] = rep.witness;
      return j;
    };
    out["order"] = t.order();
    out["leftInvertive"] = law(li);
    out["medial"] = law(medial);
    out["paramedial3"] = law(pm3);
    out["antiRectangular"] = law(ar);
    out["leftIdentities"] = to_json(ids);
    out["zero"] = zero ? json(*zero) : json(nullptr);
    print_json(out);
  } else {
    std::cout << "order: " << t.order() << "\n";
    std::cout << "left-invertive: " << law_line(li) << "\n";
    std::cout << "medial: " << law_line(medial) << "\n";
    std::cout << "paramedial3: " << law_line(pm3) << "\n";
    std::cout << "left identities: " << ids.to_string() << "\n";
    std::cout << "zero: " << (zero ? std::to_string(*zero) : "none") << "\n";
    std::cout << "anti-rectangular: " << law_line(ar) << "\n";
  }
  return li.holds ? kOk : kAxiom;
}

int cmd_canon(const std::string& file) {
  AGTable t = load_table(file);
  std::cout << emit_table(canonical_form(t));
  return kOk;
}

int cmd_ideals(const std::string& file, const std::string& kind_name,
               bool predicates, bool as_json) {
  auto kind = ideal_kind_from_string(kind_name);
  if (!kind) {
    std::cerr << "unknown kind: " << kind_name << "\n";
    return kUsage;
  }
  AGTable t = load_table(file);
  require_validated(t);
  const int cap = subset_cap_from_env();
  SubsetFamily fam = enumerate_subsets_of_kind(t, *kind, cap);

  json out_members = json::array();
  for (const ElemSet& x : fam) {
    if (as_json) {
      json member;
      member["members"] = to_json(x);
      if (predicates) {
        member["idempotent"] = is_idempotent_subset(t, x);
        member["prime"] = is_prime_member(t, x, *kind, cap).ok;
        member["semiprime"] = is_semiprime_member(t, x, *kind, cap).ok;
        member["stronglyIrreducible"] = is_strongly_irreducible(t, x, *kind, cap).ok;
        if (*kind == IdealKind::LeftIdeal) {
          member["quasiPrime"] = is_quasi_prime(t, x, cap).ok;
        }
      }
      out_members.push_back(member);
    } else {
      std::cout << x.to_string();
      if (predicates) {
        std::cout << (is_idempotent_subset(t, x) ? "  idempotent" : "")
                  << (is_prime_member(t, x, *kind, cap).ok ? "  prime" : "")
                  << (is_semiprime_member(t, x, *kind, cap).ok ? "  semiprime" : "")
                  << (is_strongly_irreducible(t, x, *kind, cap).ok
                          ? "  strongly-irreducible"
                          : "");
        if (*kind == IdealKind::LeftIdeal) {
          std::cout << (is_quasi_prime(t, x, cap).ok ? "  quasi-prime" : "");
        }
      }
      std::cout << "\n";
    }
  }
  if (as_json) {
    json out;
    out["kind"] = kind_name;
    out["count"] = fam.size();
    out["family"] = out_members;
    print_json(out);
  } else {
    std::cout << fam.size() << " " << kind_name << " member(s)\n";
  }
  return kOk;
}

int cmd_topology(const std::string& file, const std::string& space,
                 bool as_json, bool as_dot) {
  SpaceKind mode;
  if (space == "omega") {
    mode = SpaceKind::BiIdealSpace;
  } else if (space == "spectrum") {
    mode = SpaceKind::PrimeSpectrum;
  } else {
    std::cerr << "unknown space: " << space << "\n";
    return kUsage;
  }
  AGTable t = load_table(file);
  require_validated(t);
  const int cap = subset_cap_from_env();

  try {
    FiniteTopology topo = mode == SpaceKind::BiIdealSpace
                              ? build_gamma_omega(t, cap)
                              : build_gamma_ps(t, cap);
    ClaimResult axioms = verify_topology(topo);
    ClaimResult phi = verify_phi_preservation(t, mode, cap);
    if (as_dot) {
      std::cout << topology_to_dot(topo);
      return kOk;
    }
    if (as_json) {
      json out = to_json(topo);
      out["space"] = space;
      out["applicable"] = true;
      out["verifyTopology"] = to_string(axioms.verdict);
      out["phiPreservation"] = to_string(phi.verdict);
      out["phiMode"] = phi.note;
      print_json(out);
    } else {
      std::cout << "space: " << space << "\n";
      std::cout << "points (" << topo.points.size() << "):";
      for (const ElemSet& p : topo.points) std::cout << " " << p.to_string();
      std::cout << "\n";
      std::cout << "opens (" << topo.opens.size() << "):\n";
      for (const OpenSet& o : topo.opens) {
        std::cout << "  {";
        for (size_t i = 0; i < o.members.size(); ++i) {
          if (i) std::cout << ',';
          std::cout << o.members[i];
        }
        std::cout << "} labels:";
        for (const ElemSet& l : o.labels) std::cout << " " << l.to_string();
        std::cout << "\n";
      }
      std::cout << "verify-topology: " << to_string(axioms.verdict) << "\n";
      std::cout << "phi-preservation: " << to_string(phi.verdict)
                << (phi.note.empty() ? "" : " (" + phi.note + ")") << "\n";
    }
    return kOk;
  } catch (const NotApplicableError& e) {
    if (as_json) {
      json out;
      out["space"] = space;
      out["applicable"] = false;
      out["reason"] = e.what();
      print_json(out);
    } else {
      std::cout << "not-applicable: " << e.what() << "\n";
    }
    return kOk;
  }
}

int cmd_enumerate(int order, bool left_identity, bool zero, bool anti_rect,
                  bool iso, std::optional<std::uint64_t> limit, bool census) {
  const int cap = search_cap_from_env();
  if (order < 1 || order > cap) {
    std::cerr << "order must be in [1, " << cap << "]\n";
    return kUsage;
  }
  SearchSpec spec;
  spec.order = order;
  spec.require_left_identity = left_identity;
  spec.require_zero = zero;
  spec.require_anti_rectangular = anti_rect;
  spec.up_to_isomorphism = iso;
  spec.limit = limit;

  if (census) {
    print_json(to_json(census_counts(spec)));
    return kOk;
  }
  bool first = true;
  enumerate_ag_groupoids(spec, [&first](const AGTable& t) {
    if (!first) std::cout << "---\n";
    std::cout << emit_table(t);
    first = false;
    return true;
  });
  return kOk;
}

int cmd_verify(const std::vector<std::string>& files, std::optional<int> order,
               const std::string& claims_csv, bool as_json) {
  std::optional<std::vector<std::string>> filter;
  if (!claims_csv.empty()) {
    filter.emplace();
    std::stringstream ss(claims_csv);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (id.empty()) continue;
      if (!is_known_claim(id)) {
        std::cerr << "unknown claim id: " << id << "\n";
        return kUsage;
      }
      filter->push_back(id);
    }
  }

  std::vector<AGTable> corpus;
  if (order) {
    const int cap = search_cap_from_env();
    if (*order < 1 || *order > cap) {
      std::cerr << "order must be in [1, " << cap << "]\n";
      return kUsage;
    }
    SearchSpec spec;
    spec.order = *order;
    corpus = collect_ag_groupoids(spec);
  }
  for (const std::string& file : files) {
    AGTable t = load_table(file);
    require_validated(t);
    corpus.push_back(std::move(t));
  }
  if (corpus.empty()) {
    std::cerr << "no corpus: pass files or --order\n";
    return kUsage;
  }

  CorpusReport report = run_corpus(corpus, filter, subset_cap_from_env());
  if (as_json) {
    print_json(to_json(report));
  } else {
    std::cout << "corpus size: " << report.corpus_size << "\n";
    for (const ClaimInfo& info : claim_registry()) {
      auto it = report.claims.find(info.id);
      if (it == report.claims.end()) continue;
      const ClaimTally& tally = it->second;
      std::cout << info.id << " [" << info.summary << "]: holds=" << tally.holds
                << " violated=" << tally.violated
                << " not-applicable=" << tally.not_applicable
                << " vacuous=" << tally.vacuous << "\n";
      for (const ViolationRecord& rec : tally.witnesses) {
        std::cout << "  counterexample:\n";
        std::istringstream lines(rec.table_agt);
        std::string line;
        while (std::getline(lines, line)) {
          std::cout << "    " << line << "\n";
        }
        if (!rec.witness.detail.empty()) {
          std::cout << "    " << rec.witness.detail << "\n";
        }
        if (!rec.witness.sets.empty()) {
          std::cout << "    sets:";
          for (const ElemSet& s : rec.witness.sets) {
            std::cout << " " << s.to_string();
          }
          std::cout << "\n";
        }
        if (!rec.witness.elements.empty()) {
          std::cout << "    elements:";
          for (int e : rec.witness.elements) std::cout << " " << e;
          std::cout << "\n";
        }
        if (!rec.note.empty()) {
          std::cout << "    note: " << rec.note << "\n";
        }
      }
    }
  }
  for (const auto& [id, tally] : report.claims) {
    if (tally.violated > 0) return kViolated;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"agtop: finite AG-groupoid structure and topology toolkit"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "axiom checks on one table");
  check->add_option("file", file)->required();
  check->add_flag("--json", as_json);

  auto* canon = app.add_subcommand("canon", "canonical form of one table");
  canon->add_option("file", file)->required();

  std::string kind = "two-sided";
  bool predicates = false;
  auto* ideals = app.add_subcommand("ideals", "enumerate an ideal-kind family");
  ideals->add_option("file", file)->required();
  ideals->add_option("--kind", kind, "left|right|two-sided|bi|sub-groupoid");
  ideals->add_flag("--predicates", predicates,
                   "annotate members with primality predicates");
  ideals->add_flag("--json", as_json);

  std::string space = "spectrum";
  bool as_dot = false;
  auto* topology = app.add_subcommand("topology", "build a hull-kernel topology");
  topology->add_option("file", file)->required();
  topology->add_option("--space", space, "omega|spectrum");
  auto* topo_json = topology->add_flag("--json", as_json);
  topology->add_flag("--dot", as_dot, "specialization preorder in DOT form")
      ->excludes(topo_json);

  int order = 1;
  bool f_lid = false, f_zero = false, f_ar = false, f_iso = false, f_census = false;
  std::uint64_t limit_val = 0;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "exhaustively generate AG-groupoids");
  enumerate->add_option("--order", order)->required();
  enumerate->add_flag("--left-identity", f_lid);
  enumerate->add_flag("--zero", f_zero);
  enumerate->add_flag("--anti-rectangular", f_ar);
  enumerate->add_flag("--iso", f_iso, "canonical representatives only");
  enumerate->add_option("--limit", limit_val);
  enumerate->add_flag("--census", f_census, "print classification counts only");

  std::vector<std::string> files;
  int verify_order = 0;
  std::string claims_csv;
  auto* verify = app.add_subcommand("verify", "run the claim registry");
  verify->add_option("files", files);
  verify->add_option("--order", verify_order,
                     "generate the full corpus of this order");
  verify->add_option("--claims", claims_csv, "comma-separated claim ids");
  verify->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, as_json);
    if (canon->parsed()) return cmd_canon(file);
    if (ideals->parsed()) return cmd_ideals(file, kind, predicates, as_json);
    if (topology->parsed()) return cmd_topology(file, space, as_json, as_dot);
    if (enumerate->parsed()) {
      std::optional<std::uint64_t> limit;
      if (enumerate->count("--limit")) limit = limit_val;
      return cmd_enumerate(order, f_lid, f_zero, f_ar, f_iso, limit, f_census);
    }
    if (verify->parsed()) {
      std::optional<int> ord;
      if (verify->count("--order")) ord = verify_order;
      return cmd_verify(files, ord, claims_csv, as_json);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "axiom error: " << e.what() << "\n";
    return kAxiom;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
