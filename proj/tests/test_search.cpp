#include <algorithm>
#include <numeric>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "agtop/search.hpp"

using namespace agtop;

namespace {

SearchSpec spec_of_order(int n) {
  SearchSpec s;
  s.order = n;
  return s;
}

// Independent oracle: all n^(n*n) tables filtered by a direct law scan.
std::vector<std::vector<int>> brute_force_left_invertive(int n) {
  std::vector<std::vector<int>> out;
  const int cells = n * n;
  std::vector<int> t(cells, 0);
  auto law = [&](int a, int b) { return t[a * n + b]; };
  while (true) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        for (int c = 0; c < n; ++c) {
          if (law(law(a, b), c) != law(law(c, b), a)) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) out.push_back(t);
    int i = cells - 1;
    while (i >= 0 && t[i] == n - 1) {
      t[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

}  // namespace

TEST_CASE("search is complete at small orders", "[search][oracle]") {
  REQUIRE(collect_ag_groupoids(spec_of_order(1)).size() == 1);

  std::vector<AGTable> two = collect_ag_groupoids(spec_of_order(2));
  std::vector<std::vector<int>> oracle = brute_force_left_invertive(2);
  REQUIRE(two.size() == oracle.size());
  for (size_t i = 0; i < two.size(); ++i) {
    REQUIRE(two[i].entries() == oracle[i]);
  }
  REQUIRE(two.size() == 6);
  REQUIRE(two[0].entries() == std::vector<int>{0, 0, 0, 0});
  REQUIRE(two[2].entries() == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("order-3 corpus", "[search]") {
  std::vector<AGTable> three = collect_ag_groupoids(spec_of_order(3));
  REQUIRE(three.size() == 105);
  // The subtraction table on Z3 is in the stream.
  AGTable z3(3, {0, 1, 2, 2, 0, 1, 1, 2, 0});
  REQUIRE(std::find(three.begin(), three.end(), z3) != three.end());
  // Soundness: every emitted table re-passes the law scan.
  for (const AGTable& t : three) {
    REQUIRE(check_left_invertive(t).holds);
  }
  // Determinism: a second run emits the identical stream.
  std::vector<AGTable> again = collect_ag_groupoids(spec_of_order(3));
  REQUIRE(three == again);
}

TEST_CASE("filters", "[search]") {
  SearchSpec s = spec_of_order(2);
  s.require_left_identity = true;
  REQUIRE(collect_ag_groupoids(s).size() == 4);

  s = spec_of_order(2);
  s.require_zero = true;
  REQUIRE(collect_ag_groupoids(s).size() == 4);

  s = spec_of_order(2);
  s.require_anti_rectangular = true;
  std::vector<AGTable> ar = collect_ag_groupoids(s);
  REQUIRE(ar.size() == 2);
  REQUIRE(std::find(ar.begin(), ar.end(), AGTable(2, {0, 1, 1, 0})) != ar.end());

  s = spec_of_order(3);
  s.limit = 5;
  std::vector<AGTable> limited = collect_ag_groupoids(s);
  std::vector<AGTable> full = collect_ag_groupoids(spec_of_order(3));
  REQUIRE(limited.size() == 5);
  REQUIRE(std::equal(limited.begin(), limited.end(), full.begin()));
}

TEST_CASE("isomorphism dedup", "[search][canon]") {
  SearchSpec s = spec_of_order(2);
  s.up_to_isomorphism = true;
  std::vector<AGTable> reps2 = collect_ag_groupoids(s);
  REQUIRE(reps2.size() == 3);
  REQUIRE(reps2[0].entries() == std::vector<int>{0, 0, 0, 0});
  REQUIRE(reps2[1].entries() == std::vector<int>{0, 0, 0, 1});
  REQUIRE(reps2[2].entries() == std::vector<int>{0, 1, 1, 0});

  s = spec_of_order(3);
  s.up_to_isomorphism = true;
  std::vector<AGTable> reps3 = collect_ag_groupoids(s);
  REQUIRE(reps3.size() == 20);

  s = spec_of_order(4);
  s.up_to_isomorphism = true;
  std::vector<AGTable> reps4 = collect_ag_groupoids(s);
  REQUIRE(reps4.size() == 331);

  // No two representatives are related by any relabeling.
  for (const std::vector<AGTable>* reps : {&reps2, &reps3, &reps4}) {
    for (size_t i = 0; i < reps->size(); ++i) {
      REQUIRE(canonical_form((*reps)[i]) == (*reps)[i]);
      for (size_t j = i + 1; j < reps->size(); ++j) {
        std::vector<int> perm((*reps)[i].order());
        std::iota(perm.begin(), perm.end(), 0);
        bool related = false;
        do {
          if (relabel((*reps)[i], perm) == (*reps)[j]) related = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        REQUIRE_FALSE(related);
      }
    }
  }
}

TEST_CASE("census", "[search]") {
  CensusCounts one = census_counts(spec_of_order(1));
  REQUIRE(one.total == 1);
  REQUIRE(one.associative == 1);
  REQUIRE(one.non_associative == 0);

  CensusCounts two = census_counts(spec_of_order(2));
  REQUIRE(two.total == 6);
  REQUIRE(two.with_left_identity == 4);
  REQUIRE(two.with_zero == 4);
  REQUIRE(two.anti_rectangular == 2);
  REQUIRE(two.associative == 6);
  REQUIRE(two.non_associative == 0);

  CensusCounts three = census_counts(spec_of_order(3));
  REQUIRE(three.total == 105);
  REQUIRE(three.with_left_identity == 30);
  REQUIRE(three.with_zero == 57);
  REQUIRE(three.anti_rectangular == 0);
  REQUIRE(three.associative == 63);
  REQUIRE(three.non_associative == 42);

  SearchSpec iso3 = spec_of_order(3);
  iso3.up_to_isomorphism = true;
  REQUIRE(census_counts(iso3).total == 20);

  CensusCounts four = census_counts(spec_of_order(4));
  REQUIRE(four.total == 7336);
  REQUIRE(four.with_left_identity == 448);
  REQUIRE(four.with_zero == 2440);
  REQUIRE(four.anti_rectangular == 6);
  REQUIRE(four.associative == 1236);

  SearchSpec iso4 = spec_of_order(4);
  iso4.up_to_isomorphism = true;
  CensusCounts four_iso = census_counts(iso4);
  REQUIRE(four_iso.total == 331);
  REQUIRE(four_iso.with_left_identity == 25);
  REQUIRE(four_iso.with_zero == 115);
  REQUIRE(four_iso.anti_rectangular == 2);
  REQUIRE(four_iso.associative == 62);
}

TEST_CASE("order-5 census, the stretch cap", "[search][extreme]") {
  CensusCounts five = census_counts(spec_of_order(5));
  REQUIRE(five.total == 3756645);
  REQUIRE(five.with_left_identity == 9140);
  REQUIRE(five.with_zero == 547605);
  REQUIRE(five.anti_rectangular == 0);
  REQUIRE(five.associative == 43950);

  // The class count matches the published enumeration of AG-groupoids of
  // order 5.
  SearchSpec iso = spec_of_order(5);
  iso.up_to_isomorphism = true;
  CensusCounts classes = census_counts(iso);
  REQUIRE(classes.total == 31913);
  REQUIRE(classes.with_left_identity == 107);
  REQUIRE(classes.with_zero == 4779);
  REQUIRE(classes.anti_rectangular == 0);
  REQUIRE(classes.associative == 446);
}

TEST_CASE("search caps", "[search]") {
  REQUIRE_THROWS_AS(collect_ag_groupoids(spec_of_order(9)), CapError);
  REQUIRE_THROWS_AS(collect_ag_groupoids(spec_of_order(0)), CapError);
  SearchSpec bad = spec_of_order(2);
  bad.limit = 0;
  REQUIRE_THROWS_AS(collect_ag_groupoids(bad), std::invalid_argument);
}
