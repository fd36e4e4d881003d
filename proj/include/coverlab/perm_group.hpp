#pragma once

#include "coverlab/permutation.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace coverlab {

inline constexpr std::uint64_t kDefaultGroupSeed = 20240611;

/// Permutation group given by generators, with a stabilizer chain built by
/// Schreier-Sims: a seeded random phase followed by a deterministic pass that
/// sifts every Schreier generator, so the chain is always complete.
class PermGroup {
 public:
  /// Trivial group of the given degree.
  explicit PermGroup(int degree = 0);
  /// `base_prefix` points come first in the base (in that order), so the
  /// strong generators fixing them generate their pointwise stabilizer.
  PermGroup(int degree, std::vector<Permutation> generators, std::uint64_t seed = kDefaultGroupSeed,
            std::vector<int> base_prefix = {});

  int degree() const { return degree_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<int>& base() const { return base_; }
  /// Strong generators fixing base points 0..level-1.
  std::vector<Permutation> strong_generators(std::size_t level) const;
  /// Basic orbit of base point `level`.
  const std::vector<int>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }
  /// Element of the level's stabilizer mapping base()[level] to `point`, or
  /// nullptr when `point` is outside the basic orbit.
  const Permutation* transversal(std::size_t level, int point) const;

  BigInt order() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  std::vector<int> orbit(int point) const;
  /// Orbits ordered by least element, each sorted.
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  PermGroup stabilizer(int point) const;
  PermGroup pointwise_stabilizer(std::span<const int> points) const;

  /// All elements; throws std::length_error when order() > limit.
  std::vector<Permutation> elements(std::size_t limit = 100000) const;

  /// Subgroup check by membership of every generator of `h`.
  bool contains_group(const PermGroup& h) const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Permutation> strong;  // generators fixing earlier base points
    std::vector<int> orbit;
    std::vector<int> index;  // point -> position in transversal, -1 if absent
    std::vector<Permutation> transversal;
  };

  void build(std::vector<int> base_prefix);
  void rebuild_orbit(Level& level) const;
  /// Returns residue and the level at which sifting stopped (levels_.size() when it passed all).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t start = 0) const;
  void add_strong_generator(const Permutation& g, std::size_t upto);

  int degree_ = 0;
  std::uint64_t seed_ = kDefaultGroupSeed;
  std::vector<Permutation> gens_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

/// Group generated by `gens` acting on the union of all given points, closed
/// naively by breadth-first multiplication. Reference oracle for tests.
std::vector<Permutation> naive_closure(const std::vector<Permutation>& gens, int degree, std::size_t limit);

}  // namespace coverlab
