#include "coverlab/automorphisms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace coverlab {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + h;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Ordered partition: cells are contiguous ranges of `elems`, identified by
/// their start position.
struct Partition {
  std::vector<int> elems;
  std::vector<int> cell_of;  // vertex -> start of its cell
  std::vector<int> cell_end;  // start -> end (exclusive); meaningful at starts only

  explicit Partition(int n) : elems(n), cell_of(n, 0), cell_end(n, n) { std::iota(elems.begin(), elems.end(), 0); }
  bool discrete() const {
    for (int s = 0; s < static_cast<int>(elems.size()); s = cell_end[s]) {
      if (cell_end[s] - s > 1) return false;
    }
    return true;
  }
  int first_nonsingleton() const {
    for (int s = 0; s < static_cast<int>(elems.size()); s = cell_end[s]) {
      if (cell_end[s] - s > 1) return s;
    }
    return -1;
  }
};

/// Distance-class refinement. Signatures count, for each vertex, the
/// splitter's members at each distance; fragments are ordered by signature so
/// the result is label-independent.
class Refiner {
 public:
  explicit Refiner(const Graph& g, int width) : n_(g.vertex_count()), width_(width) {
    dist_.resize(static_cast<std::size_t>(n_) * n_);
    for (int s = 0; s < n_; ++s) {
      const std::vector<int> d = bfs_distances(g, s);
      for (int t = 0; t < n_; ++t) dist_[static_cast<std::size_t>(s) * n_ + t] = static_cast<std::uint8_t>(d[t] < 0 ? width_ - 1 : d[t]);
    }
    sig_.resize(static_cast<std::size_t>(n_) * width_);
    key_.resize(n_);
  }

  int diameter_bound() const { return width_; }

  std::uint64_t refine(Partition& p, std::deque<int> queue) {
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    std::uint64_t h = 0;
    int cells = 0;
    for (int s = 0; s < n_; s = p.cell_end[s]) ++cells;
    while (!queue.empty() && cells < n_) {
      const int w = queue.front();
      queue.pop_front();
      queued[w] = 0;
      if (p.cell_end[w] - w == 1) {
        const std::uint8_t* row = &dist_[static_cast<std::size_t>(p.elems[w]) * n_];
        for (int x = 0; x < n_; ++x) key_[x] = row[x];
      } else {
        std::fill(sig_.begin(), sig_.end(), 0);
        for (int i = w; i < p.cell_end[w]; ++i) {
          const std::uint8_t* row = &dist_[static_cast<std::size_t>(p.elems[i]) * n_];
          for (int x = 0; x < n_; ++x) ++sig_[static_cast<std::size_t>(x) * width_ + row[x]];
        }
        for (int x = 0; x < n_; ++x) {
          std::uint64_t k = 0;
          for (int d = 0; d < width_; ++d) k = mix(k, static_cast<std::uint64_t>(sig_[static_cast<std::size_t>(x) * width_ + d]));
          key_[x] = k;
        }
      }
      h = mix(h, static_cast<std::uint64_t>(w));
      for (int s = 0; s < n_;) {
        const int e = p.cell_end[s];
        if (e - s > 1) {
          const std::uint64_t first = key_[p.elems[s]];
          if (std::all_of(p.elems.begin() + s + 1, p.elems.begin() + e, [&](int x) { return key_[x] == first; })) {
            s = e;
            continue;
          }
          std::sort(p.elems.begin() + s, p.elems.begin() + e, [&](int a, int b) { return key_[a] < key_[b]; });
          std::vector<int> starts{s};
          for (int i = s + 1; i < e; ++i) {
            if (key_[p.elems[i - 1]] != key_[p.elems[i]]) starts.push_back(i);
          }
          if (starts.size() > 1) {
            cells += static_cast<int>(starts.size()) - 1;
            starts.push_back(e);
            // A cell that is not pending may leave its largest fragment out.
            const bool was_queued = queued[s] != 0;
            std::size_t largest = 0;
            for (std::size_t f = 1; f + 1 < starts.size(); ++f) {
              if (starts[f + 1] - starts[f] > starts[largest + 1] - starts[largest]) largest = f;
            }
            for (std::size_t f = 0; f + 1 < starts.size(); ++f) {
              const int fs = starts[f];
              const int fe = starts[f + 1];
              p.cell_end[fs] = fe;
              for (int i = fs; i < fe; ++i) p.cell_of[p.elems[i]] = fs;
              const int rep = p.elems[fs];
              h = mix(h, static_cast<std::uint64_t>(fs) << 32 | static_cast<std::uint64_t>(fe - fs));
              h = mix(h, key_[rep]);
              if (!queued[fs] && (was_queued || f != largest)) {
                queued[fs] = 1;
                queue.push_back(fs);
              }
            }
          }
        }
        s = e;
      }
    }
    return h;
  }

  void individualize(Partition& p, int v) const {
    const int s = p.cell_of[v];
    const int e = p.cell_end[s];
    auto it = std::find(p.elems.begin() + s, p.elems.begin() + e, v);
    std::iter_swap(p.elems.begin() + s, it);
    p.cell_end[s] = s + 1;
    p.cell_end[s + 1] = e;
    for (int i = s + 1; i < e; ++i) p.cell_of[p.elems[i]] = s + 1;
    p.cell_of[v] = s;
  }

 private:
  int n_;
  int width_;
  std::vector<std::uint8_t> dist_;
  std::vector<int> sig_;
  std::vector<std::uint64_t> key_;  // per-vertex digest of sig_ for the current splitter
};

int distance_width(const Graph& a, const Graph* b) {
  int diam = 0;
  for (const Graph* g : {&a, b}) {
    if (g == nullptr) continue;
    for (int s = 0; s < g->vertex_count(); ++s) {
      for (int d : bfs_distances(*g, s)) diam = std::max(diam, d);
    }
  }
  if (diam > 250) throw std::invalid_argument("graph diameter too large for the refiner");
  return diam + 2;  // distances 0..diam plus "unreachable"
}

struct FirstPath {
  std::vector<Partition> nodes;       // node before individualizing at each level
  std::vector<std::uint64_t> inv;     // invariant after refinement at each node
  std::vector<int> chosen;            // vertex individualized at each level
  std::vector<int> leaf;
};

FirstPath build_first_path(Refiner& refiner, int n) {
  FirstPath fp;
  Partition p(n);
  std::uint64_t inv = refiner.refine(p, {0});
  while (true) {
    fp.nodes.push_back(p);
    fp.inv.push_back(inv);
    const int s = p.first_nonsingleton();
    if (s < 0) break;
    const int v = *std::min_element(p.elems.begin() + s, p.elems.begin() + p.cell_end[s]);
    fp.chosen.push_back(v);
    refiner.individualize(p, v);
    inv = mix(refiner.refine(p, {s}), static_cast<std::uint64_t>(s));
  }
  fp.leaf = p.elems;
  return fp;
}

class LeafSearch {
 public:
  LeafSearch(Refiner& refiner, const FirstPath& fp, const Graph& from, const Graph& to, std::uint64_t& budget)
      : refiner_(refiner), fp_(fp), from_(from), to_(to), budget_(budget) {}

  /// Depth-first search below `p` (at depth `depth`) for a leaf mapping the
  /// first-path leaf onto an isomorphism from -> to.
  std::optional<Permutation> search(Partition& p, std::size_t depth) {
    if (budget_ == 0) throw std::runtime_error("automorphism search exceeded its node budget");
    --budget_;
    const int s = p.first_nonsingleton();
    if (s < 0) {
      if (depth + 1 != fp_.nodes.size()) return std::nullopt;
      std::vector<int> img(p.elems.size());
      for (std::size_t i = 0; i < img.size(); ++i) img[fp_.leaf[i]] = p.elems[i];
      Permutation gamma(std::move(img));
      if (maps_edges(gamma)) return gamma;
      return std::nullopt;
    }
    if (depth + 1 >= fp_.nodes.size()) return std::nullopt;
    std::vector<int> cell(p.elems.begin() + s, p.elems.begin() + p.cell_end[s]);
    std::sort(cell.begin(), cell.end());
    for (int u : cell) {
      auto found = try_child(p, u, s, depth);
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<Permutation> try_child(const Partition& p, int u, int s, std::size_t depth) {
    Partition child = p;
    refiner_.individualize(child, u);
    const std::uint64_t inv = mix(refiner_.refine(child, {s}), static_cast<std::uint64_t>(s));
    if (inv != fp_.inv[depth + 1]) return std::nullopt;
    return search(child, depth + 1);
  }

 private:
  bool maps_edges(const Permutation& gamma) const {
    for (const auto& [u, v] : from_.edges()) {
      if (!to_.adjacent(gamma(u), gamma(v))) return false;
    }
    return true;
  }

  Refiner& refiner_;
  const FirstPath& fp_;
  const Graph& from_;
  const Graph& to_;
  std::uint64_t& budget_;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p(u), p(v))) return false;
  }
  return true;
}

PermGroup automorphism_group(const Graph& g, const AutomorphismOptions& options) {
  const int n = g.vertex_count();
  if (n > options.max_vertices) {
    throw SizeBoundError("automorphism search limited to " + std::to_string(options.max_vertices) + " vertices, got " +
                         std::to_string(n));
  }
  if (n == 0) return PermGroup(0);
  Refiner refiner(g, distance_width(g, nullptr));
  const FirstPath fp = build_first_path(refiner, n);
  std::uint64_t budget = options.node_budget;
  LeafSearch search(refiner, fp, g, g, budget);

  std::vector<Permutation> gens;
  std::vector<int> parent(n);
  for (std::size_t level = fp.chosen.size(); level-- > 0;) {
    const Partition& node = fp.nodes[level];
    const int c = fp.chosen[level];
    const int s = node.cell_of[c];
    // Orbits of the generators found so far; all of them fix the earlier choices.
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](const Permutation& gamma) {
      for (int x = 0; x < n; ++x) parent[find_root(parent, x)] = find_root(parent, gamma(x));
    };
    for (const auto& gamma : gens) unite(gamma);
    std::vector<int> cell(node.elems.begin() + s, node.elems.begin() + node.cell_end[s]);
    std::sort(cell.begin(), cell.end());
    std::vector<int> rejected;
    for (int w : cell) {
      if (w == c || find_root(parent, w) == find_root(parent, c)) continue;
      const bool known_bad = std::any_of(rejected.begin(), rejected.end(),
                                         [&](int r) { return find_root(parent, r) == find_root(parent, w); });
      if (known_bad) continue;
      auto gamma = search.try_child(node, w, s, level);
      if (gamma) {
        gens.push_back(*gamma);
        unite(*gamma);
      } else {
        rejected.push_back(w);
      }
    }
  }
  return PermGroup(n, std::move(gens), options.seed);
}

PermGroup automorphism_group(const CoverGraph& g, const AutomorphismOptions& options) {
  return automorphism_group(g.graph(), options);
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b, const AutomorphismOptions& options) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (n > options.max_vertices) throw SizeBoundError("isomorphism search exceeds the vertex bound");
  if (n == 0) return Permutation::identity(0);
  const int width = distance_width(a, &b);
  Refiner ra(a, width);
  Refiner rb(b, width);
  const FirstPath fp = build_first_path(ra, n);
  Partition root(n);
  if (rb.refine(root, {0}) != fp.inv[0]) return std::nullopt;
  std::uint64_t budget = options.node_budget;
  LeafSearch search(rb, fp, a, b, budget);
  return search.search(root, 0);
}

}  // namespace coverlab
