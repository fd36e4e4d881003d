#pragma once

#include "coverlab/surd.hpp"

#include <cstddef>
#include <vector>

namespace coverlab {

/// Permutation of {0, ..., degree-1} stored as an image array.
/// Products compose left to right: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  Permutation pow(long long e) const;
  bool is_identity() const;
  BigInt order() const;
  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> fixed_points() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace coverlab
