#pragma once

#include "coverlab/perm_group.hpp"

#include <cstddef>
#include <vector>

namespace coverlab {

struct SubgroupSearchOptions {
  std::size_t max_group_order = 10000;
  std::size_t max_subgroups = 50000;
};

/// Subgroups H with base <= H <= G reachable from `base` by a chain of
/// extensions <U, g>, where g normalizes U and has prime order modulo U.
/// With a trivial base this yields every solvable subgroup. Results are
/// ordered by order, then by element set. Throws std::length_error when
/// |G| exceeds the option bound.
std::vector<PermGroup> overgroups_by_cyclic_extension(const PermGroup& G, const PermGroup& base,
                                                      const SubgroupSearchOptions& options = {});

/// All subgroups of order `order` reachable by cyclic extension from the trivial group.
std::vector<PermGroup> subgroups_of_order(const PermGroup& G, const BigInt& order,
                                          const SubgroupSearchOptions& options = {});

}  // namespace coverlab
