#include "agtop/table.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <istream>
#include <numeric>
#include <sstream>

namespace agtop {

AGTable::AGTable(int order, std::vector<int> entries, std::string name)
    : n_(order), entries_(std::move(entries)), name_(std::move(name)) {
  if (n_ < 1) {
    throw std::invalid_argument("table order must be at least 1");
  }
  if (entries_.size() != static_cast<size_t>(n_) * n_) {
    throw std::invalid_argument("table entry count does not match order");
  }
  for (int v : entries_) {
    if (v < 0 || v >= n_) {
      throw std::invalid_argument("table entry out of range");
    }
  }
}

bool AGTable::left_invertive() const {
  if (!left_invertive_) {
    left_invertive_ = check_left_invertive(*this).holds;
  }
  return *left_invertive_;
}

void require_validated(const AGTable& t) {
  if (!t.left_invertive()) {
    throw ValidationError("table does not satisfy the left invertive law");
  }
}

const char* to_string(Law law) {
  switch (law) {
    case Law::LeftInvertive: return "left-invertive";
    case Law::Medial: return "medial";
    case Law::Paramedial3: return "paramedial3";
    case Law::PermutationIdentity: return "permutation-identity";
    case Law::AntiRectangular: return "anti-rectangular";
  }
  return "?";
}

namespace {

// Reads physical lines, skipping comments and blank lines but counting them
// for error reporting.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next significant line, or nullopt at end of input.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      size_t pos = line.find_first_not_of(" \t");
      if (pos == std::string::npos) {
        continue;
      }
      if (line[pos] == '#') {
        continue;
      }
      return line;
    }
    ++lineno_;
    return std::nullopt;
  }

  int lineno() const { return lineno_; }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

std::vector<long long> parse_ints(const std::string& line, int lineno) {
  std::vector<long long> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected an integer, got \"" + tok + "\"");
    }
    if (used != tok.size()) {
      throw ParseError(lineno, "expected an integer, got \"" + tok + "\"");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

AGTable parse_table(std::istream& in) {
  LineReader reader(in);
  auto header = reader.next();
  if (!header) {
    throw ParseError(reader.lineno(), "missing header: expected table order");
  }
  auto header_vals = parse_ints(*header, reader.lineno());
  if (header_vals.size() != 1) {
    throw ParseError(reader.lineno(), "malformed header: expected a single integer order");
  }
  long long n = header_vals[0];
  if (n == 0) {
    throw ParseError(reader.lineno(), "table order must be positive, got 0");
  }
  if (n < 0 || n > 1000) {
    throw ParseError(reader.lineno(), "table order " + std::to_string(n) + " out of range");
  }
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (long long row = 0; row < n; ++row) {
    auto line = reader.next();
    if (!line) {
      throw ParseError(reader.lineno(),
                       "unexpected end of input: expected row " + std::to_string(row)
                       + " of " + std::to_string(n));
    }
    auto vals = parse_ints(*line, reader.lineno());
    if (vals.size() != static_cast<size_t>(n)) {
      throw ParseError(reader.lineno(),
                       "row " + std::to_string(row) + " has " + std::to_string(vals.size())
                       + " entries, expected " + std::to_string(n));
    }
    for (long long v : vals) {
      if (v < 0 || v >= n) {
        throw ParseError(reader.lineno(),
                         "entry " + std::to_string(v) + " out of range [0,"
                         + std::to_string(n) + ")");
      }
      entries.push_back(static_cast<int>(v));
    }
  }
  return AGTable(static_cast<int>(n), std::move(entries));
}

AGTable parse_table(const std::string& text) {
  std::istringstream stream(text);
  AGTable t = parse_table(static_cast<std::istream&>(stream));
  // Anything significant after the table is an error.
  std::streampos upto = stream.tellg();
  if (upto >= 0) {
    std::string consumed = text.substr(0, static_cast<size_t>(upto));
    int lineno = static_cast<int>(std::count(consumed.begin(), consumed.end(), '\n'));
    std::istringstream tail(text.substr(static_cast<size_t>(upto)));
    std::string line;
    while (std::getline(tail, line)) {
      ++lineno;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') {
        throw ParseError(lineno, "trailing content after table");
      }
    }
  }
  return t;
}

std::string emit_table(const AGTable& t) {
  std::string out = std::to_string(t.order());
  out += '\n';
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) {
      if (b > 0) {
        out += ' ';
      }
      out += std::to_string(t.at(a, b));
    }
    out += '\n';
  }
  return out;
}

namespace {

AxiomReport report_holds(Law law) {
  AxiomReport rep;
  rep.law = law;
  rep.holds = true;
  return rep;
}

AxiomReport report_violation(Law law, std::vector<int> witness) {
  AxiomReport rep;
  rep.law = law;
  rep.holds = false;
  rep.witness = std::move(witness);
  return rep;
}

}  // namespace

AxiomReport check_left_invertive(const AGTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = t.at(a, b);
      for (int c = 0; c < n; ++c) {
        if (t.at(ab, c) != t.at(t.at(c, b), a)) {
          return report_violation(Law::LeftInvertive, {a, b, c});
        }
      }
    }
  }
  return report_holds(Law::LeftInvertive);
}

AxiomReport check_medial(const AGTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = t.at(a, b);
      for (int c = 0; c < n; ++c) {
        const int ac = t.at(a, c);
        for (int d = 0; d < n; ++d) {
          if (t.at(ab, t.at(c, d)) != t.at(ac, t.at(b, d))) {
            return report_violation(Law::Medial, {a, b, c, d});
          }
        }
      }
    }
  }
  return report_holds(Law::Medial);
}

AxiomReport check_paramedial3(const AGTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = t.at(a, b);
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          if (t.at(ab, t.at(c, d)) != t.at(t.at(d, b), t.at(c, a))) {
            return report_violation(Law::Paramedial3, {a, b, c, d});
          }
        }
      }
    }
  }
  return report_holds(Law::Paramedial3);
}

AxiomReport check_anti_rectangular(const AGTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (t.at(t.at(b, a), b) != a) {
        return report_violation(Law::AntiRectangular, {a, b});
      }
    }
  }
  return report_holds(Law::AntiRectangular);
}

ElemSet left_identities(const AGTable& t) {
  const int n = t.order();
  ElemSet out(n);
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      if (t.at(e, a) != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.add(e);
    }
  }
  return out;
}

std::optional<int> find_zero(const AGTable& t) {
  const int n = t.order();
  std::optional<int> found;
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int s = 0; s < n; ++s) {
      if (t.at(z, s) != z || t.at(s, z) != z) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // Two absorbing elements would force z1 = z1*z2 = z2.
      assert(!found);
      found = z;
    }
  }
  return found;
}

int power(const AGTable& t, int a, int k) {
  if (k < 1) {
    throw std::invalid_argument("power exponent must be at least 1");
  }
  int r = a;
  for (int i = 1; i < k; ++i) {
    r = t.at(r, a);
  }
  return r;
}

AxiomReport check_permutation_identity(const AGTable& t, int max_exp) {
  if (max_exp < 2) {
    throw std::invalid_argument("max_exp must be at least 2");
  }
  if (left_identities(t).empty()) {
    AxiomReport rep;
    rep.law = Law::PermutationIdentity;
    rep.applicable = false;
    rep.note = "no left identity";
    return rep;
  }
  const int n = t.order();
  // pow[a][k] for k in [1, max_exp].
  std::vector<std::vector<int>> pw(n, std::vector<int>(max_exp + 1));
  for (int a = 0; a < n; ++a) {
    for (int k = 1; k <= max_exp; ++k) {
      pw[a][k] = power(t, a, k);
    }
  }
  // All 24 permutations of positions, in lexicographic order.
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::vector<std::array<int, 4>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::array<int, 4> x{};
  for (x[0] = 0; x[0] < n; ++x[0]) {
    for (x[1] = 0; x[1] < n; ++x[1]) {
      for (x[2] = 0; x[2] < n; ++x[2]) {
        for (x[3] = 0; x[3] < n; ++x[3]) {
          for (int m = 2; m <= max_exp; ++m) {
            for (int nn = 2; nn <= max_exp; ++nn) {
              for (int q = 2; q <= max_exp; ++q) {
                for (int r = 2; r <= max_exp; ++r) {
                  const int lhs = t.at(t.at(pw[x[0]][m], pw[x[1]][nn]),
                                       t.at(pw[x[2]][q], pw[x[3]][r]));
                  for (const auto& p : perms) {
                    const int rhs = t.at(t.at(pw[x[p[0]]][m], pw[x[p[1]]][nn]),
                                         t.at(pw[x[p[2]]][q], pw[x[p[3]]][r]));
                    if (lhs != rhs) {
                      return report_violation(
                          Law::PermutationIdentity,
                          {x[0], x[1], x[2], x[3], m, nn, q, r,
                           p[0], p[1], p[2], p[3]});
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return report_holds(Law::PermutationIdentity);
}

AGTable relabel(const AGTable& t, const std::vector<int>& perm) {
  const int n = t.order();
  if (perm.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("permutation size does not match table order");
  }
  std::vector<int> out(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out[static_cast<size_t>(perm[a]) * n + perm[b]] = perm[t.at(a, b)];
    }
  }
  return AGTable(n, std::move(out), t.name());
}

AGTable canonical_form(const AGTable& t) {
  const int n = t.order();
  if (n > kCanonicalOrderCap) {
    throw CapError("canonical form capped at order "
                   + std::to_string(kCanonicalOrderCap));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = t.entries();
  std::vector<int> cand(best.size());
  do {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        cand[static_cast<size_t>(perm[a]) * n + perm[b]] = perm[t.at(a, b)];
      }
    }
    if (cand < best) {
      best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return AGTable(n, std::move(best), t.name());
}

}  // namespace agtop
