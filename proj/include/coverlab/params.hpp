#pragma once

#include "coverlab/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coverlab {

/// Parameters of a distance-regular antipodal r-cover of K_n together with
/// its spectrum. Eigenvalues are n-1 > theta > -1 > tau with multiplicities
/// 1, m_theta, n-1, m_tau.
struct CoverParams {
  BigInt n;
  BigInt r;
  BigInt mu;
  BigInt lambda;
  BigInt v;
  Surd theta;
  Surd tau;
  Surd m_theta;
  Surd m_tau;
  bool multiplicities_integral = false;

  BigInt degree() const { return n - 1; }
};

/// Derives lambda, the spectrum and multiplicities from (n, r, mu).
/// Multiplicities use the denominator (theta - tau).
/// Throws std::invalid_argument when n < 3, r < 2, mu < 1 or lambda < 0.
CoverParams derive_params(const BigInt& n, const BigInt& r, const BigInt& mu);

/// Parameter family with n = (t^2-1)^2 and tau = -t (odd r, complex lines
/// meeting the absolute bound).
struct FamilyBParams {
  BigInt t;
  BigInt r;
  bool special = false;  // the (9,3,3) entry, t = 2, r = 3
  CoverParams cover;
};

FamilyBParams family_B(const BigInt& t, const BigInt& r);

/// Which parametrization of the even-r family produced a CoverParams.
enum class FamilyABranch {
  kGeneral,      // n = (t^2-2)(t^2-1)/2, mu = (t-1)^3 (t+2) / (2r)
  kDoublePlus,   // r = 2, mu = (t+1)^3 (t-2) / 4
  kDoubleMinus,  // r = 2, mu = (t-1)^3 (t+2) / 4
  kSporadic,     // (28, 4, 8)
};

std::string to_string(FamilyABranch branch);

/// Even-r family. `t` is an integer or sqrt(5) (only with r = 2).
/// Throws std::invalid_argument outside that domain or when mu is not a
/// positive integer.
CoverParams family_A(const Surd& t, const BigInt& r, FamilyABranch branch);

struct FeasibleB {
  BigInt t;
  BigInt r;
  bool special = false;
  CoverParams cover;
};

/// All (t, r) with 2 <= t <= t_max, r >= 2, r | t-1, gcd(6, r) = 1, plus the
/// special (9,3,3) entry, sorted by (t, r).
std::vector<FeasibleB> feasible_B(const BigInt& t_max);

struct FeasibleA {
  Surd t;
  BigInt r;
  FamilyABranch branch = FamilyABranch::kGeneral;
  CoverParams cover;
  /// Conditions that were checked and held, e.g. "i".."vi" for the general branch.
  std::vector<std::string> conditions;
};

/// Entries of the even-r family for t <= t_max: the general branch with r >= 4
/// filtered by conditions (i)-(vi), both r = 2 branches (integer t and
/// t = sqrt 5), and the sporadic (28,4,8).
std::vector<FeasibleA> feasible_A(const BigInt& t_max);

/// Checks conditions (i)-(vi) of the even-r general branch for one (t, r).
/// Returns the labels of conditions that hold; all six hold iff size() == 6.
std::vector<std::string> family_A_conditions(const BigInt& t, const BigInt& r);

struct HoffmanBounds {
  Rational clique;
  Rational coclique;
};

/// Spectral clique and coclique bounds for a family-B parameter set:
/// 1 + (t^2-2) t and r (t^2-1)^2 / (1 + (t^2-2) t).
HoffmanBounds hoffman_bounds(const FamilyBParams& p);

}  // namespace coverlab
