#include "coverlab/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace coverlab {

namespace {

constexpr int kRandomTrivialSiftsToStop = 30;

int first_moved_point(const Permutation& g) {
  for (int x = 0; x < g.degree(); ++x) {
    if (g(x) != x) return x;
  }
  return -1;
}

}  // namespace

PermGroup::PermGroup(int degree) : degree_(degree) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::uint64_t seed,
                     std::vector<int> base_prefix)
    : degree_(degree), seed_(seed), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree differs from group degree");
  }
  build(std::move(base_prefix));
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.index.assign(degree_, -1);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.index[level.base_point] = 0;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int x = level.orbit[head];
    for (const auto& s : level.strong) {
      const int y = s(x);
      if (level.index[y] >= 0) continue;
      level.index[y] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(level.transversal[level.index[x]] * s);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Permutation& g, std::size_t start) const {
  Permutation h = g;
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const int x = h(levels_[i].base_point);
    const int idx = levels_[i].index[x];
    if (idx < 0) return {h, i};
    h = h * levels_[i].transversal[idx].inverse();
  }
  return {h, levels_.size()};
}

void PermGroup::add_strong_generator(const Permutation& g, std::size_t from) {
  // g fixes the base points before its first moved base point; extend the base if it fixes them all.
  std::size_t upto = 0;
  while (upto < levels_.size() && g(levels_[upto].base_point) == levels_[upto].base_point) ++upto;
  if (upto == levels_.size()) {
    const int p = first_moved_point(g);
    base_.push_back(p);
    Level level;
    level.base_point = p;
    levels_.push_back(std::move(level));
  }
  for (std::size_t i = from; i <= upto; ++i) {
    levels_[i].strong.push_back(g);
    rebuild_orbit(levels_[i]);
  }
}

void PermGroup::build(std::vector<int> base_prefix) {
  base_.clear();
  levels_.clear();
  for (int p : base_prefix) {
    if (p < 0 || p >= degree_) throw std::invalid_argument("base point out of range");
    if (std::find(base_.begin(), base_.end(), p) != base_.end()) continue;
    base_.push_back(p);
    Level level;
    level.base_point = p;
    levels_.push_back(std::move(level));
  }
  for (auto& level : levels_) rebuild_orbit(level);

  std::vector<Permutation> nontrivial;
  for (const auto& g : gens_) {
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  for (const auto& g : nontrivial) add_strong_generator(g, 0);
  if (nontrivial.empty()) return;

  // Random phase: product replacement, sifting until enough consecutive
  // random elements sift to the identity.
  std::mt19937_64 rng(seed_);
  std::vector<Permutation> state;
  while (state.size() < std::max<std::size_t>(10, nontrivial.size())) {
    state.push_back(nontrivial[state.size() % nontrivial.size()]);
  }
  Permutation acc = Permutation::identity(degree_);
  auto step = [&] {
    std::uniform_int_distribution<std::size_t> pick(0, state.size() - 1);
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    state[i] = (rng() & 1U) ? state[i] * state[j] : state[i] * state[j].inverse();
    acc = acc * state[i];
    return acc;
  };
  for (int i = 0; i < 50; ++i) step();
  for (int trivial = 0; trivial < kRandomTrivialSiftsToStop;) {
    auto [residue, level] = sift(step());
    if (residue.is_identity()) {
      ++trivial;
    } else {
      trivial = 0;
      add_strong_generator(residue, 0);
      (void)level;
    }
  }

  // Deterministic completion: every Schreier generator must sift.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t lvl = i - 1;
    bool extended = false;
    for (std::size_t oi = 0; oi < levels_[lvl].orbit.size() && !extended; ++oi) {
      const int x = levels_[lvl].orbit[oi];
      for (std::size_t si = 0; si < levels_[lvl].strong.size(); ++si) {
        const Permutation& s = levels_[lvl].strong[si];
        const Level& L = levels_[lvl];
        const Permutation h = L.transversal[L.index[x]] * s * L.transversal[L.index[s(x)]].inverse();
        auto [residue, stop] = sift(h, lvl + 1);
        if (residue.is_identity()) continue;
        add_strong_generator(residue, lvl + 1);
        std::size_t upto = lvl + 1;
        while (upto + 1 < levels_.size() && residue(levels_[upto].base_point) == levels_[upto].base_point) ++upto;
        i = upto + 1;
        (void)stop;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::vector<Permutation> PermGroup::strong_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].strong;
}

const Permutation* PermGroup::transversal(std::size_t level, int point) const {
  if (level >= levels_.size() || point < 0 || point >= degree_) return nullptr;
  const int idx = levels_[level].index[point];
  return idx < 0 ? nullptr : &levels_[level].transversal[idx];
}

BigInt PermGroup::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

bool PermGroup::contains_group(const PermGroup& h) const {
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const Permutation& g) { return contains(g); });
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
    }
  }
  return true;
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> out{point};
  std::vector<char> seen(degree_, 0);
  seen[point] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens_) {
      const int y = g(out[head]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree_, 0);
  for (int x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    out.push_back(orbit(x));
    for (int y : out.back()) seen[y] = 1;
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbit(0).size() == static_cast<std::size_t>(degree_); }

PermGroup PermGroup::pointwise_stabilizer(std::span<const int> points) const {
  std::vector<int> prefix(points.begin(), points.end());
  PermGroup chain(degree_, gens_, seed_, prefix);
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::find(prefix.begin(), prefix.begin() + i, prefix[i]) == prefix.begin() + i) ++distinct;
  }
  return PermGroup(degree_, chain.strong_generators(distinct), seed_);
}

PermGroup PermGroup::stabilizer(int point) const {
  const int pts[1] = {point};
  return pointwise_stabilizer(pts);
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order() > limit) throw std::length_error("group order " + order().str() + " exceeds enumeration limit");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[i].transversal.size());
    for (const auto& e : out) {
      for (const auto& t : levels_[i].transversal) next.push_back(e * t);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Permutation> naive_closure(const std::vector<Permutation>& gens, int degree, std::size_t limit) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  std::vector<Permutation> out{id};
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (out.size() >= limit) throw std::length_error("naive closure exceeds limit");
        out.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return out;
}

}  // namespace coverlab
