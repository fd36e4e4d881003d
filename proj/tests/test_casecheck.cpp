#include "coverlab/casecheck.hpp"

#include <doctest.h>

#include <chrono>
#include <set>

using namespace coverlab;

namespace {

using Row = std::vector<long long>;

/// Selected fields of every solution, in the given order.
std::set<Row> rows(const CaseReport& r, const std::vector<std::string>& names) {
  std::set<Row> out;
  for (const auto& s : r.solutions) {
    Row row;
    for (const auto& name : names) {
      for (const auto& [k, v] : s.fields) {
        if (k == name) row.push_back(static_cast<long long>(v));
      }
    }
    REQUIRE(row.size() == names.size());
    out.insert(row);
  }
  return out;
}

}  // namespace

TEST_CASE("symplectic case: t - 1 = 2x, t + 1 = 2^(d-2) y") {
  const CaseReport r = sp_case(3, 6);
  CHECK(r.match);
  CHECK(rows(r, {"t", "d"}) == std::set<Row>{{11, 4}, {23, 5}});
  CHECK(sp_case(3, 3).solutions.empty());
  CHECK(sp_case(3, 3).match);
  const CaseReport v = sp_case_variant(3, 6);
  CHECK(v.solutions.empty());
  CHECK(v.match);
  // Enlarging the range keeps earlier solutions.
  const auto wide = rows(sp_case(3, 8), {"t", "d"});
  CHECK(wide.count({11, 4}) == 1);
  CHECK(wide.count({23, 5}) == 1);
}

TEST_CASE("linear case 3.1") {
  const CaseReport r = linear_case_31(16);
  CHECK(r.match);
  CHECK(rows(r, {"q", "d", "t", "r"}) == std::set<Row>{{2, 6, 8, 7}, {2, 8, 16, 5}});
  CHECK(rows(linear_case_31(2), {"q", "d", "t", "r"}) == std::set<Row>{{2, 6, 8, 7}, {2, 8, 16, 5}});
  const CaseReport est = linear_case_31(16, true);
  CHECK(est.solutions.empty());
  CHECK(est.match);
}

TEST_CASE("square-root target searches for 11 and 20") {
  const CaseReport a = claim4_search(11);
  CHECK(a.match);
  CHECK(rows(a, {"t", "p", "l"}) == std::set<Row>{{12, 13, 2}});
  const CaseReport b = claim4_search(20);
  CHECK(b.match);
  CHECK(b.solutions.empty());
  // The p | 20 sub-branch is reported with reasons.
  CHECK_FALSE(b.details.empty());
}

TEST_CASE("twin prime-power centers") {
  const CaseReport r = twin_power_centers(20);
  CHECK(r.match);
  CHECK(rows(r, {"t"}) == std::set<Row>{{6}, {8}, {12}, {18}});
  CHECK(rows(twin_power_centers(6), {"t"}) == std::set<Row>{{6}});
  const std::set<Row> big = rows(twin_power_centers(1000), {"t"});
  const std::vector<long long> oracle{6,   8,   12,  18,  24,  26,  30,  42,  48,  60,  72,  80,  102, 108, 126,
                                      138, 150, 168, 180, 192, 198, 228, 240, 242, 270, 282, 312, 348, 360, 420,
                                      432, 462, 522, 570, 600, 618, 642, 660, 728, 810, 822, 828, 840, 858, 882};
  std::set<Row> expected;
  for (long long t : oracle) expected.insert({t});
  CHECK(big == expected);
  for (const auto& row : big) CHECK(row[0] % 2 == 0);
}

TEST_CASE("sporadic filter is empty") {
  const CaseReport r = sporadic_filter();
  CHECK(r.match);
  CHECK(r.solutions.empty());
  bool m12 = false;
  for (const auto& line : r.details) m12 = m12 || line.rfind("m=12", 0) == 0;
  CHECK(m12);
}

TEST_CASE("congruence eliminations up to 1000") {
  const CaseReport r = congruence_check(1000);
  CHECK(r.match);
  CHECK(r.solutions.empty());
}

TEST_CASE("zsigmondy and Nagell-Ljunggren as case reports") {
  const CaseReport z = zsigmondy_case_report(1000000);
  CHECK(z.match);
  CHECK(z.solutions.size() == 13);
  const CaseReport n = nagell_ljunggren_case(200, 20);
  CHECK(n.match);
  CHECK(rows(n, {"x", "i", "y"}) == std::set<Row>{{7, 4, 20}, {3, 5, 11}});
}

TEST_CASE("every registered case matches, within the time budget") {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& id : case_ids()) {
    CAPTURE(id);
    const CaseReport r = run_case(id);
    CHECK(r.case_id == id);
    CHECK(r.match);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 60.0);
  CHECK(case_ids().size() == 11);
  CHECK_THROWS_AS(run_case("no-such-case"), std::invalid_argument);
}
