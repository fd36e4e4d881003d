#pragma once

#include "coverlab/surd.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coverlab {

bool is_prime(const BigInt& x);

struct PrimePower {
  BigInt p;
  unsigned k = 0;
};

/// x = p^k with p prime and k >= 1, found by trial division.
std::optional<PrimePower> prime_power(const BigInt& x);

BigInt ipow(const BigInt& base, unsigned exponent);

struct PPartDecomposition {
  BigInt l;
  BigInt p;
  BigInt p_part;
  BigInt p_prime_part;
};

/// Throws std::invalid_argument when p is not prime or l < 1.
PPartDecomposition p_part(const BigInt& l, const BigInt& p);

struct LiftingCheck {
  BigInt lhs;  // (q^m - e^m)_p
  BigInt rhs;  // (m)_p (q - e)_p
  bool equal = false;
  bool applicable = false;
};

/// e must be +1 or -1; p prime.
LiftingCheck lifting_identity_check(const BigInt& q, int e, unsigned m, const BigInt& p);

struct GcdCheck {
  BigInt gcd;       // gcd(q^k - 1, q^m - 1)
  BigInt expected;  // q^gcd(k,m) - 1
  bool equal = false;
};

GcdCheck gcd_qpow(const BigInt& q, unsigned k, unsigned m);

struct ZsigmondySolution {
  std::uint64_t p = 0, m = 0, q = 0, n = 0;
  int lemma_case = 0;  // 1, 2, 3, or 0 when unclassified
};

/// All p^m = q^n + 1 with p, q prime and p^m <= bound, in increasing p^m.
std::vector<ZsigmondySolution> zsigmondy_corollary_solve(std::uint64_t bound);

/// Classification into the three cases; 0 when none applies.
int zsigmondy_case(std::uint64_t p, std::uint64_t m, std::uint64_t q, std::uint64_t n);

struct NagellLjunggrenSolution {
  unsigned x = 0, i = 0;
  BigInt y;
  bool operator==(const NagellLjunggrenSolution&) const = default;
};

/// (x^i - 1)/(x - 1) = y^2 over 2 <= x <= x_max, 3 <= i <= i_max.
std::vector<NagellLjunggrenSolution> nagell_ljunggren_search(unsigned x_max, unsigned i_max);

struct SweepBounds {
  unsigned lifting_q = 50, lifting_m = 30, lifting_p = 50;
  unsigned gcd_q = 20, gcd_km = 40;
};

struct SweepReport {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t applicable = 0;
  std::vector<std::string> counterexamples;
};

SweepReport lifting_sweep(const SweepBounds& bounds = {});
SweepReport gcd_sweep(const SweepBounds& bounds = {});

}  // namespace coverlab
