#ifndef AGTOP_ELEM_SET_HPP_
#define AGTOP_ELEM_SET_HPP_

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace agtop {

// Caps. Subset machinery scans 2^n masks, so the universe is capped; the
// default can be raised per call up to the hard limit.
inline constexpr int kDefaultSubsetCap = 16;
inline constexpr int kHardSubsetCap    = 20;
inline constexpr int kSearchOrderCap   = 5;
inline constexpr int kCanonicalOrderCap = 8;

using Mask = std::uint32_t;

// Errors. ParseError carries the 1-based input line; CapError marks a
// request beyond the configured enumeration caps; ValidationError marks an
// operation that requires a left-invertive table; NotApplicableError marks
// an unmet mathematical hypothesis (no zero, no left identity) and is a
// reportable outcome rather than a failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotApplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A subset of the universe {0, ..., n-1}, stored as a bitmask. Value type;
// comparison is extensional and the ascending-bitmask order doubles as the
// canonical family order everywhere.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe_order, Mask bits = 0)
      : n_(universe_order), bits_(bits) {
    if (universe_order < 0 || universe_order > kHardSubsetCap) {
      throw CapError("subset universe order " + std::to_string(universe_order)
                     + " outside [0, " + std::to_string(kHardSubsetCap) + "]");
    }
    bits_ &= (Mask{1} << universe_order) - 1;
  }

  static ElemSet full(int n) { return ElemSet(n, ~Mask{0}); }
  static ElemSet single(int n, int a) { return ElemSet(n, Mask{1} << a); }
  static ElemSet of(int n, std::initializer_list<int> xs) {
    ElemSet s(n);
    for (int x : xs) {
      s.add(x);
    }
    return s;
  }

  int  universe_order() const noexcept { return n_; }
  Mask bits() const noexcept { return bits_; }
  bool empty() const noexcept { return bits_ == 0; }
  int  size() const noexcept { return __builtin_popcount(bits_); }

  bool contains(int a) const noexcept { return (bits_ >> a) & 1u; }
  void add(int a) {
    if (a < 0 || a >= n_) {
      throw std::invalid_argument("element " + std::to_string(a)
                                  + " outside universe of order "
                                  + std::to_string(n_));
    }
    bits_ |= Mask{1} << a;
  }

  bool subset_of(const ElemSet& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  ElemSet intersect(const ElemSet& other) const {
    return ElemSet(n_, bits_ & other.bits_);
  }
  ElemSet unite(const ElemSet& other) const {
    return ElemSet(n_, bits_ | other.bits_);
  }

  bool operator==(const ElemSet& other) const noexcept {
    return n_ == other.n_ && bits_ == other.bits_;
  }
  bool operator!=(const ElemSet& other) const noexcept {
    return !(*this == other);
  }
  // Ascending-bitmask order (universes compared first).
  bool operator<(const ElemSet& other) const noexcept {
    return n_ != other.n_ ? n_ < other.n_ : bits_ < other.bits_;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
      if (contains(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  // "{0,2,4}" with ascending members; "{}" when empty.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
      if (contains(i)) {
        if (!first) {
          out += ',';
        }
        out += std::to_string(i);
        first = false;
      }
    }
    out += '}';
    return out;
  }

 private:
  int  n_    = 0;
  Mask bits_ = 0;
};

// An ordered collection of subsets (a kind family, a point set, an open-set
// family). Always kept in ascending bitmask order.
using SubsetFamily = std::vector<ElemSet>;

enum class Verdict { Holds, Violated, NotApplicable, Vacuous };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Vacuous: return "vacuous";
  }
  return "?";
}

// Structured counterexample: element indices and/or subsets, plus a free-form
// detail line. A Violated result always carries one that re-checks against
// the underlying predicate.
struct Witness {
  std::vector<int>     elements;
  std::vector<ElemSet> sets;
  std::string          detail;

  bool empty() const {
    return elements.empty() && sets.empty() && detail.empty();
  }
};

// Verdict of one claim on one instance.
struct ClaimResult {
  std::string claim;
  Verdict     verdict = Verdict::Holds;
  Witness     witness;
  std::string note;
};

}  // namespace agtop

#endif  // AGTOP_ELEM_SET_HPP_
