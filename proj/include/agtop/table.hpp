#ifndef AGTOP_TABLE_HPP_
#define AGTOP_TABLE_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "agtop/elem_set.hpp"

namespace agtop {

// A finite magma given by its Cayley table. Elements are 0..n-1; the entry
// at (row a, col b) is the product a*b (row = left operand). Parsing does
// not enforce the left invertive law; operations that need it go through
// require_validated().
class AGTable {
 public:
  AGTable(int order, std::vector<int> entries, std::string name = "");

  int order() const noexcept { return n_; }
  int at(int a, int b) const { return entries_[a * n_ + b]; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  const std::string&      name() const noexcept { return name_; }

  // Cached Eq-(1) flag; first call scans all triples.
  bool left_invertive() const;

  bool operator==(const AGTable& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }
  bool operator!=(const AGTable& other) const { return !(*this == other); }

 private:
  int n_;
  std::vector<int> entries_;
  std::string name_;
  mutable std::optional<bool> left_invertive_;
};

// Throws ValidationError unless t satisfies the left invertive law.
void require_validated(const AGTable& t);

enum class Law {
  LeftInvertive,
  Medial,
  Paramedial3,
  PermutationIdentity,
  AntiRectangular,
};

const char* to_string(Law law);

// Outcome of one axiom scan. The witness is the lexicographically first
// failing tuple and is empty exactly when the law holds; its layout depends
// on the law (see each check). `applicable` is false only for the
// permutation identity on a table without left identity.
struct AxiomReport {
  Law              law;
  bool             holds = false;
  std::vector<int> witness;
  bool             applicable = true;
  std::string      note;
};

// AGT format: '#' lines are comments, first significant line is n, then n
// lines of n base-10 entries in [0,n). parse_table reads exactly one table
// from the stream; the string overload also rejects trailing content.
// Errors are ParseError with a 1-based line number.
AGTable parse_table(std::istream& in);
AGTable parse_table(const std::string& text);

// Exact inverse of parsing: header line, n rows of single-space separated
// entries, trailing LF, no comments.
std::string emit_table(const AGTable& t);

// (ab)c = (cb)a for all triples; witness (a,b,c).
AxiomReport check_left_invertive(const AGTable& t);
// (ab)(cd) = (ac)(bd) for all quadruples; witness (a,b,c,d).
AxiomReport check_medial(const AGTable& t);
// (ab)(cd) = (db)(ca) for all quadruples; witness (a,b,c,d).
AxiomReport check_paramedial3(const AGTable& t);
// (ba)b = a for all pairs; witness (a,b).
AxiomReport check_anti_rectangular(const AGTable& t);

// All e with e*a = a for every a; may be empty.
ElemSet left_identities(const AGTable& t);

// The absorbing element z (z*s = s*z = z for all s) if present. At most one
// can exist.
std::optional<int> find_zero(const AGTable& t);

// Left-iterated power: a^1 = a, a^(k+1) = a^k * a. k >= 1.
int power(const AGTable& t, int a, int k);

// (x1^m x2^n)(x3^q x4^r) = (xp(1)^m xp(2)^n)(xp(3)^q xp(4)^r) for all
// element quadruples, all 24 permutations p and all exponents in
// [2, max_exp]. The exponents stay anchored to their positions while the
// variables permute. Requires a left identity; reports not-applicable
// otherwise. Witness layout: x1,x2,x3,x4, m,n,q,r, p(1..4).
AxiomReport check_permutation_identity(const AGTable& t, int max_exp);

// Table with elements renamed by perm: result[perm[a]][perm[b]] =
// perm[t[a][b]].
AGTable relabel(const AGTable& t, const std::vector<int>& perm);

// Lexicographically least relabeling (flattened row-major) over all n!
// permutations. Two tables are isomorphic iff their canonical forms agree.
// Orders above kCanonicalOrderCap are rejected.
AGTable canonical_form(const AGTable& t);

}  // namespace agtop

#endif  // AGTOP_TABLE_HPP_
