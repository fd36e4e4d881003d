#include "coverlab/subgroups.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace coverlab {

namespace {

bool is_prime_small(std::size_t k) {
  if (k < 2) return false;
  for (std::size_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

struct Candidate {
  std::vector<int> members;  // sorted element ids
  std::vector<Permutation> gens;
};

}  // namespace

std::vector<PermGroup> overgroups_by_cyclic_extension(const PermGroup& G, const PermGroup& base,
                                                      const SubgroupSearchOptions& options) {
  if (G.order() > options.max_group_order) {
    throw std::length_error("subgroup enumeration limited to groups of order " + std::to_string(options.max_group_order));
  }
  if (!G.contains_group(base)) throw std::invalid_argument("base is not a subgroup of G");
  const std::vector<Permutation> elems = G.elements(options.max_group_order);
  std::unordered_map<Permutation, int, PermutationHash> id;
  for (std::size_t i = 0; i < elems.size(); ++i) id.emplace(elems[i], static_cast<int>(i));
  const std::size_t order = elems.size();

  auto closure = [&](const std::vector<Permutation>& gens) {
    std::vector<char> in(order, 0);
    std::vector<int> members{id.at(Permutation::identity(G.degree()))};
    in[members.front()] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (const auto& g : gens) {
        const int y = id.at(elems[members[head]] * g);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  std::map<std::vector<int>, std::vector<Permutation>> found;
  std::vector<std::vector<int>> frontier;
  {
    auto members = closure(base.generators());
    found.emplace(members, base.generators());
    frontier.push_back(std::move(members));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& U : frontier) {
      const std::vector<Permutation> ugens = found.at(U);
      std::vector<char> in_u(order, 0);
      for (int x : U) in_u[x] = 1;
      std::vector<char> done(order, 0);
      for (std::size_t gi = 0; gi < order; ++gi) {
        if (in_u[gi] || done[gi]) continue;
        const Permutation& g = elems[gi];
        const Permutation ginv = g.inverse();
        const bool normalizes = std::all_of(ugens.begin(), ugens.end(),
                                            [&](const Permutation& u) { return in_u[id.at(ginv * u * g)] != 0; });
        if (!normalizes) continue;
        std::size_t k = 1;
        Permutation power = g;
        while (!in_u[id.at(power)]) {
          power = power * g;
          ++k;
        }
        if (!is_prime_small(k)) continue;
        std::vector<Permutation> hgens = ugens;
        hgens.push_back(g);
        auto members = closure(hgens);
        for (int x : members) done[x] = 1;
        if (found.count(members)) continue;
        if (found.size() >= options.max_subgroups) throw std::length_error("subgroup enumeration exceeded its bound");
        found.emplace(members, std::move(hgens));
        next.push_back(std::move(members));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::vector<int>, std::vector<Permutation>>> ordered(found.begin(), found.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  std::vector<PermGroup> out;
  for (auto& [members, gens] : ordered) out.emplace_back(G.degree(), std::move(gens), G.seed());
  return out;
}

std::vector<PermGroup> subgroups_of_order(const PermGroup& G, const BigInt& order, const SubgroupSearchOptions& options) {
  std::vector<PermGroup> out;
  for (auto& h : overgroups_by_cyclic_extension(G, PermGroup(G.degree()), options)) {
    if (h.order() == order) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace coverlab
