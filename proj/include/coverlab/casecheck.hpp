#pragma once

#include "coverlab/surd.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace coverlab {

/// One solution of a finite case analysis, as named integer fields in a fixed
/// order (e.g. {"t", 11}, {"d", 4}).
struct CaseSolution {
  std::vector<std::pair<std::string, BigInt>> fields;
  std::string note;
  bool operator==(const CaseSolution& o) const { return fields == o.fields; }
  bool operator<(const CaseSolution& o) const { return fields < o.fields; }
};

struct CaseReport {
  std::string case_id;
  std::string search_space;
  std::vector<CaseSolution> solutions;
  std::vector<CaseSolution> expected;
  bool match = false;  // solutions == expected as sets
  /// Extra rows (excluded candidates with reasons, sub-branches).
  std::vector<std::string> details;
};

/// t - 1 = 2x, t + 1 = 2^(d-2) y, xy = 2^d +- 1 over t >= 6 and d_min <= d <= d_max.
CaseReport sp_case(int d_min, int d_max);
/// t + 1 = 2y, t - 1 = 2^(d-2) x, xy = 2^d +- 1.
CaseReport sp_case_variant(int d_min, int d_max);

/// (t^2-1)(q-1) = q^d - 1 for prime powers q <= q_max and 6 <= d <= 8, with r
/// the largest divisor of t - 1 prime to 6 (r >= 2). With apply_estimate the
/// solutions are filtered by (t-1)(r-1)/r <= 2q - 1.
CaseReport linear_case_31(int q_max, bool apply_estimate = false);

/// (t^2-1) = target * p^(l/2) with p prime, l even and t - 1 divisible by a
/// prime >= 5. The search over t is exhaustive up to 4 * target.
CaseReport claim4_search(int target);

/// Even t <= t_max, t >= 6, with t - 1 = p1^s1 (p1 >= 5) and t + 1 = p2^s2.
CaseReport twin_power_centers(int t_max);

/// For m in the sporadic list, all 2 <= t <= 15 with m | (t^2-1)^2 and
/// (t^2-1)^2 / m a prime power.
CaseReport sporadic_filter();

/// lambda_1 = z1 (t^2-2) - t + (t-1)/r for z1 in {1,2} and admissible r must
/// avoid residues {0,1} modulo (t^2-3)/2 (odd t) and modulo t^2-3.
CaseReport congruence_check(int t_max);

/// Zsigmondy classification and Nagell-Ljunggren search, as case reports.
CaseReport zsigmondy_case_report(std::uint64_t bound);
CaseReport nagell_ljunggren_case(unsigned x_max, unsigned i_max);

/// Known ids: sp2d, sp2d-variant, linear31, linear31-estimate, claim4-11,
/// claim4-20, twin-power, sporadic, congruence, zsigmondy, nagell-ljunggren.
std::vector<std::string> case_ids();
/// Throws std::invalid_argument for an unknown id.
CaseReport run_case(const std::string& id);

}  // namespace coverlab
