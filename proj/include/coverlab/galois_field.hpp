#pragma once

#include <vector>

namespace coverlab {

/// Finite field F_q, q = p^k, for the prime powers q <= 16. Elements are the
/// integers 0..q-1 read as coefficient vectors in base p; multiplication uses
/// log/antilog tables over a root of the Conway polynomial.
class GaloisField {
 public:
  /// Throws std::invalid_argument when q is not a supported prime power.
  explicit GaloisField(int q);

  static bool supported(int q);
  static bool is_prime_power(int q, int* p = nullptr, int* k = nullptr);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  /// Conway polynomial coefficients, constant term first, monic.
  const std::vector<int>& conway() const { return conway_; }
  int primitive() const { return exp_[q_ > 2 ? 1 : 0]; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, long long e) const;
  /// Additive generators p^i (i < k) of (F_q, +).
  std::vector<int> additive_basis() const;

 private:
  int q_ = 0;
  int p_ = 0;
  int k_ = 0;
  std::vector<int> conway_;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> exp_;  // exp_[i] = primitive^i, i in [0, q-1)
  std::vector<int> log_;
};

}  // namespace coverlab
