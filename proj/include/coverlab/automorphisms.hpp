#pragma once

#include "coverlab/graph.hpp"
#include "coverlab/perm_group.hpp"

#include <cstdint>
#include <optional>

namespace coverlab {

struct AutomorphismOptions {
  int max_vertices = 512;
  /// Search-tree nodes allowed before giving up with std::runtime_error.
  std::uint64_t node_budget = 5'000'000;
  std::uint64_t seed = kDefaultGroupSeed;
};

/// Raised when the input exceeds AutomorphismOptions::max_vertices.
class SizeBoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Full automorphism group of `g` (fibres are ignored; for a cover they are
/// preserved automatically since they are the antipodal classes).
PermGroup automorphism_group(const Graph& g, const AutomorphismOptions& options = {});
PermGroup automorphism_group(const CoverGraph& g, const AutomorphismOptions& options = {});

/// Some isomorphism a -> b as an image array, or nullopt.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b, const AutomorphismOptions& options = {});

bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace coverlab
