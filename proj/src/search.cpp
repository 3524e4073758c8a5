#include "agtop/search.hpp"

#include <array>

namespace agtop {

namespace {

// DFS over the n*n cells with forced-cell propagation. The law instance
// (x,y,z) reads four cells: the inner products i1 = (x,y), i2 = (z,y) and,
// once those are known with values v1, v2, the outer cells o1 = (v1,z) and
// o2 = (v2,x), which must be equal. Whenever an assignment leaves exactly
// one of o1, o2 unknown, that cell's value is forced, so each branching
// decision propagates through the table and contradictions surface early.
//
// Branching always picks the lowest-index unassigned cell with values
// ascending, so completed tables still appear in lexicographic order.
class Searcher {
 public:
  Searcher(const SearchSpec& spec, const std::function<bool(const AGTable&)>& visit)
      : spec_(spec), visit_(visit), n_(spec.order),
        cells_(static_cast<size_t>(n_) * n_, kUnset) {
    trail_.reserve(cells_.size());
    worklist_.reserve(cells_.size());
  }

  void run() {
    emitted_ = 0;
    stopped_ = false;
    dfs(0);
  }

 private:
  static constexpr int kUnset = -1;

  int at(int a, int b) const { return cells_[static_cast<size_t>(a) * n_ + b]; }

  // Records the assignment for undo; a repeated assignment just has to agree.
  bool assign(int pos, int v) {
    if (cells_[pos] != kUnset) return cells_[pos] == v;
    cells_[pos] = v;
    trail_.push_back(pos);
    worklist_.push_back(pos);
    return true;
  }

  // Both outer cells of one instance must carry the same value.
  bool resolve(int o1, int o2) {
    const int v1 = cells_[o1];
    const int v2 = cells_[o2];
    if (v1 != kUnset && v2 != kUnset) return v1 == v2;
    if (v1 != kUnset) return assign(o2, v1);
    if (v2 != kUnset) return assign(o1, v2);
    return true;  // linked later, when either side is assigned
  }

  // Revisits every instance in which the newly assigned cell participates.
  // Instances (x,y,z) and (z,y,x) state the same equality, so one side of
  // each mirror pair suffices.
  bool propagate_cell(int pos) {
    const int a = pos / n_;
    const int b = pos % n_;
    const int u = cells_[pos];
    // pos as an inner cell: instances (a, b, z).
    for (int z = 0; z < n_; ++z) {
      const int v2 = at(z, b);
      if (v2 == kUnset) continue;
      if (!resolve(u * n_ + z, v2 * n_ + a)) return false;
    }
    // pos as an outer cell of (x, y, b): needs t[x][y] = a, and the other
    // outer cell is (t[b][y], x).
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (at(x, y) != a) continue;
        const int w = at(b, y);
        if (w == kUnset) continue;
        if (!resolve(pos, w * n_ + x)) return false;
      }
    }
    return true;
  }

  bool propagate() {
    while (!worklist_.empty()) {
      const int pos = worklist_.back();
      worklist_.pop_back();
      if (!propagate_cell(pos)) {
        worklist_.clear();
        return false;
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      cells_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  bool passes_filters(const AGTable& t) const {
    if (spec_.require_left_identity && left_identities(t).empty()) return false;
    if (spec_.require_zero && !find_zero(t)) return false;
    if (spec_.require_anti_rectangular && !check_anti_rectangular(t).holds) {
      return false;
    }
    if (spec_.up_to_isomorphism && canonical_form(t) != t) return false;
    return true;
  }

  void dfs(int from) {
    if (stopped_) return;
    int pos = from;
    while (pos < n_ * n_ && cells_[pos] != kUnset) ++pos;
    if (pos == n_ * n_) {
      AGTable t(n_, cells_);
      if (passes_filters(t)) {
        ++emitted_;
        if (!visit_(t) || (spec_.limit && emitted_ >= *spec_.limit)) {
          stopped_ = true;
        }
      }
      return;
    }
    for (int v = 0; v < n_ && !stopped_; ++v) {
      const size_t mark = trail_.size();
      if (assign(pos, v) && propagate()) {
        dfs(pos + 1);
      }
      undo_to(mark);
    }
  }

  const SearchSpec& spec_;
  const std::function<bool(const AGTable&)>& visit_;
  int n_;
  std::vector<int> cells_;
  std::vector<int> trail_;
  std::vector<int> worklist_;
  std::uint64_t emitted_ = 0;
  bool stopped_ = false;
};

void validate_spec(const SearchSpec& spec) {
  if (spec.order < 1 || spec.order > kSearchOrderCap) {
    throw CapError("exhaustive search capped at order "
                   + std::to_string(kSearchOrderCap) + ", got order "
                   + std::to_string(spec.order));
  }
  if (spec.limit && *spec.limit < 1) {
    throw std::invalid_argument("limit must be at least 1");
  }
}

bool is_associative(const AGTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = t.at(a, b);
      for (int c = 0; c < n; ++c) {
        if (t.at(ab, c) != t.at(a, t.at(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace

void enumerate_ag_groupoids(const SearchSpec& spec,
                            const std::function<bool(const AGTable&)>& visit) {
  validate_spec(spec);
  Searcher searcher(spec, visit);
  searcher.run();
}

std::vector<AGTable> collect_ag_groupoids(const SearchSpec& spec) {
  std::vector<AGTable> out;
  enumerate_ag_groupoids(spec, [&out](const AGTable& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

CensusCounts census_counts(const SearchSpec& spec) {
  CensusCounts counts;
  enumerate_ag_groupoids(spec, [&counts](const AGTable& t) {
    ++counts.total;
    if (!left_identities(t).empty()) ++counts.with_left_identity;
    if (find_zero(t)) ++counts.with_zero;
    if (check_anti_rectangular(t).holds) ++counts.anti_rectangular;
    if (is_associative(t)) {
      ++counts.associative;
    } else {
      ++counts.non_associative;
    }
    return true;
  });
  return counts;
}

}  // namespace agtop
