#include "coverlab/graph.hpp"

#include "coverlab/kernels.hpp"
#include "coverlab/parallel.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace coverlab {

namespace {

std::size_t padded_words(int n) {
  const std::size_t w = (static_cast<std::size_t>(n) + 63) / 64;
  return (w + 3) / 4 * 4;
}

}  // namespace

Graph::Graph(int vertex_count, std::span<const Edge> edges)
    : n_(vertex_count), words_(padded_words(vertex_count)) {
  if (vertex_count < 0) throw StructuralError("negative vertex count");
  bits_.assign(words_ * static_cast<std::size_t>(n_), 0);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw StructuralError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has a vertex out of range");
    }
    if (u == v) throw StructuralError("loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) continue;
    bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge_toggled(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw StructuralError("invalid edge to toggle");
  std::vector<Edge> e = edges();
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::find(e.begin(), e.end(), key);
  if (it != e.end()) e.erase(it);
  else e.push_back(key);
  return Graph(n_, e);
}

CoverGraph::CoverGraph(Graph graph, std::vector<std::vector<int>> fibres)
    : graph_(std::move(graph)), fibres_(std::move(fibres)) {
  const int v = graph_.vertex_count();
  if (fibres_.size() < 3) throw StructuralError("a cover needs at least 3 fibres");
  const std::size_t r = fibres_.front().size();
  if (r < 2) throw StructuralError("fibres must have size at least 2");
  fibre_of_.assign(v, -1);
  for (auto& f : fibres_) {
    if (f.size() != r) throw StructuralError("fibres have unequal sizes");
    std::sort(f.begin(), f.end());
  }
  std::sort(fibres_.begin(), fibres_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < fibres_.size(); ++i) {
    for (int x : fibres_[i]) {
      if (x < 0 || x >= v) throw StructuralError("fibre vertex " + std::to_string(x) + " out of range");
      if (fibre_of_[x] != -1) throw StructuralError("vertex " + std::to_string(x) + " lies in two fibres");
      fibre_of_[x] = static_cast<int>(i);
    }
  }
  if (fibres_.size() * r != static_cast<std::size_t>(v)) {
    throw StructuralError("fibres do not cover every vertex");
  }
  const std::size_t words = graph_.words_per_row();
  masks_.assign(words * fibres_.size(), 0);
  for (std::size_t i = 0; i < fibres_.size(); ++i) {
    for (int x : fibres_[i]) masks_[i * words + (x >> 6)] |= std::uint64_t{1} << (x & 63);
  }
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kConnected: return "connected";
    case Axiom::kFibreCoclique: return "fibre_coclique";
    case Axiom::kPerfectMatching: return "perfect_matching";
    case Axiom::kConstantMu: return "constant_mu";
    case Axiom::kConstantLambda: return "constant_lambda";
  }
  return "unknown";
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : g.neighbours(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
  dist_.assign(static_cast<std::size_t>(n_) * n_, -1);
  std::vector<int> diam(chunk_count(n_), 0);
  std::vector<char> disconnected(chunk_count(n_), 0);
  parallel_chunks(n_, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    for (std::size_t s = begin; s < end; ++s) {
      const std::vector<int> d = bfs_distances(g, static_cast<int>(s));
      for (int t = 0; t < n_; ++t) {
        dist_[s * n_ + t] = static_cast<std::int16_t>(d[t]);
        if (d[t] < 0) disconnected[chunk] = 1;
        diam[chunk] = std::max(diam[chunk], d[t]);
      }
    }
  });
  connected_ = std::none_of(disconnected.begin(), disconnected.end(), [](char c) { return c != 0; });
  diameter_ = connected_ ? *std::max_element(diam.begin(), diam.end()) : -1;
}

std::vector<std::vector<int>> distance_classes(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("distance_classes: vertex out of range");
  const std::vector<int> d = bfs_distances(g, v);
  std::vector<std::vector<int>> layers;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (d[x] < 0) throw std::invalid_argument("distance_classes: graph is disconnected");
    if (static_cast<std::size_t>(d[x]) >= layers.size()) layers.resize(d[x] + 1);
    layers[d[x]].push_back(x);
  }
  return layers;
}

std::vector<std::vector<int>> distance_classes(const CoverGraph& g, int v) {
  auto layers = distance_classes(g.graph(), v);
  if (layers.size() != 4) {
    throw std::invalid_argument("distance_classes: vertex " + std::to_string(v) + " has eccentricity " +
                                std::to_string(layers.size() - 1) + ", a cover needs 3");
  }
  return layers;
}

std::vector<std::vector<int>> antipodal_classes(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw NotAntipodalError("empty graph", {});
  const DistanceMatrix d(g);
  if (!d.connected()) throw NotAntipodalError("graph is disconnected", {});
  if (d.diameter() != 3) {
    std::vector<int> witness;
    for (int u = 0; u < n && witness.empty(); ++u) {
      for (int w = 0; w < n; ++w) {
        if (d(u, w) == d.diameter()) {
          witness = {u, w};
          break;
        }
      }
    }
    throw NotAntipodalError("diameter is " + std::to_string(d.diameter()) + ", not 3", witness);
  }
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (int u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    std::vector<int> block{u};
    for (int w = 0; w < n; ++w) {
      if (d(u, w) == 3) block.push_back(w);
    }
    // Every member must see exactly the same block.
    for (int w : block) {
      for (int x = 0; x < n; ++x) {
        const bool in_w = x == w || d(w, x) == 3;
        const bool in_u = x == u || d(u, x) == 3;
        if (in_w != in_u) {
          throw NotAntipodalError("distance-3-or-equal is not transitive", {u, w, x});
        }
      }
      cls[w] = static_cast<int>(out.size());
    }
    out.push_back(std::move(block));
  }
  return out;
}

namespace {

struct PairCounts {
  std::map<int, std::size_t> mu_hist;
  std::map<int, std::size_t> lambda_hist;
  std::vector<Violation> mu_bad;
  std::vector<Violation> lambda_bad;
  std::size_t mu_bad_total = 0;
  std::size_t lambda_bad_total = 0;
};

int mode_of(const std::map<int, std::size_t>& hist) {
  int best = 0;
  std::size_t best_count = 0;
  for (const auto& [value, count] : hist) {
    if (count > best_count) {
      best = value;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

CoverReport verify_cover(const CoverGraph& g, const VerifyOptions& options) {
  const Graph& graph = g.graph();
  const int v = graph.vertex_count();
  const int n = g.fibre_count();
  const int r = g.fibre_size();
  const std::size_t cap = options.max_violations_per_axiom;
  const std::size_t words = graph.words_per_row();

  CoverReport report;
  report.n = n;
  report.r = r;
  std::map<Axiom, std::size_t> totals;
  auto add = [&](Axiom axiom, std::vector<int> witness, std::string detail) {
    if (totals[axiom]++ < cap) report.failures.push_back({axiom, std::move(witness), std::move(detail)});
  };

  // (a) connectivity
  const DistanceMatrix dist(graph);
  report.diameter = dist.diameter();
  if (!dist.connected()) {
    for (int x = 0; x < v; ++x) {
      if (dist(0, x) < 0) add(Axiom::kConnected, {0, x}, "vertices in different components");
    }
  }

  // (b) fibres are cocliques
  for (int f = 0; f < n; ++f) {
    for (int x : g.fibres()[f]) {
      for (int y : graph.neighbours(x)) {
        if (x < y && g.fibre_of(y) == f) add(Axiom::kFibreCoclique, {x, y}, "edge inside fibre " + std::to_string(f));
      }
    }
  }

  // (c) perfect matching between every two fibres
  for (int f = 0; f < n; ++f) {
    for (int h = 0; h < n; ++h) {
      if (f == h) continue;
      for (int x : g.fibres()[f]) {
        const std::size_t c = kernels::and_popcount(graph.row(x), g.fibre_mask(h));
        if (c != 1) {
          add(Axiom::kPerfectMatching, {f, h, x},
              "vertex " + std::to_string(x) + " of fibre " + std::to_string(f) + " has " + std::to_string(c) +
                  " neighbours in fibre " + std::to_string(h));
        }
      }
    }
  }

  // (d), (e) common-neighbour counts. First pass: histograms; second pass:
  // witnesses against the modal mu and the lambda it implies.
  const std::size_t nchunks = chunk_count(v);
  auto sweep = [&](std::vector<PairCounts>& chunks, std::optional<int> mu_ref, std::optional<int> lambda_ref) {
    parallel_chunks(v, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
      PairCounts& pc = chunks[chunk];
      for (std::size_t ui = begin; ui < end; ++ui) {
        const int u = static_cast<int>(ui);
        const auto ru = graph.row(u);
        for (int w = u + 1; w < v; ++w) {
          if (g.fibre_of(u) == g.fibre_of(w)) continue;
          const int c = static_cast<int>(kernels::and_popcount(ru, graph.row(w)));
          if (graph.adjacent(u, w)) {
            if (!lambda_ref) {
              ++pc.lambda_hist[c];
            } else if (c != *lambda_ref && pc.lambda_bad_total++ < cap) {
              pc.lambda_bad.push_back({Axiom::kConstantLambda, {u, w},
                                       "adjacent pair has " + std::to_string(c) + " common neighbours, expected " +
                                           std::to_string(*lambda_ref)});
            }
          } else {
            if (!mu_ref) {
              ++pc.mu_hist[c];
            } else if (c != *mu_ref && pc.mu_bad_total++ < cap) {
              pc.mu_bad.push_back({Axiom::kConstantMu, {u, w},
                                   "non-adjacent pair has " + std::to_string(c) + " common neighbours, expected " +
                                       std::to_string(*mu_ref)});
            }
          }
        }
      }
    });
  };

  std::vector<PairCounts> first(nchunks);
  sweep(first, std::nullopt, std::nullopt);
  std::map<int, std::size_t> mu_hist;
  for (const auto& pc : first) {
    for (const auto& [value, count] : pc.mu_hist) mu_hist[value] += count;
  }
  const int mu = mode_of(mu_hist);
  const int lambda = n - (r - 1) * mu - 2;
  if (mu < 1 && !mu_hist.empty()) {
    add(Axiom::kConstantMu, {}, "modal common-neighbour count of non-adjacent pairs is 0, mu must be at least 1");
  }
  std::vector<PairCounts> second(nchunks);
  sweep(second, mu, lambda);
  for (Axiom axiom : {Axiom::kConstantMu, Axiom::kConstantLambda}) {
    for (const auto& pc : second) {
      const auto& bad = axiom == Axiom::kConstantMu ? pc.mu_bad : pc.lambda_bad;
      const std::size_t total = axiom == Axiom::kConstantMu ? pc.mu_bad_total : pc.lambda_bad_total;
      for (const auto& violation : bad) add(axiom, violation.witness, violation.detail);
      totals[axiom] += total - bad.size();
    }
  }

  const bool mu_ok = totals[Axiom::kConstantMu] == 0;
  if (mu_ok) report.mu = mu;
  if (mu_ok && totals[Axiom::kConstantLambda] == 0) report.lambda = lambda;
  for (const auto& [axiom, count] : totals) {
    if (count > 0) report.violation_totals.emplace_back(axiom, count);
  }
  report.is_cover = report.failures.empty();

  try {
    report.antipodality_confirmed = antipodal_classes(graph) == g.fibres();
  } catch (const NotAntipodalError&) {
    report.antipodality_confirmed = false;
  }
  return report;
}

SpectrumCheck spectrum_check(const CoverGraph& g, const CoverParams& p) {
  SpectrumCheck out;
  const Graph& graph = g.graph();
  const int v = graph.vertex_count();
  const BigInt k = p.degree();

  if (BigInt(v) != p.v) out.failures.push_back("vertex count " + std::to_string(v) + " differs from v = " + p.v.str());
  for (int x = 0; x < v; ++x) {
    if (BigInt(graph.degree(x)) != k) {
      out.failures.push_back("vertex " + std::to_string(x) + " has degree " + std::to_string(graph.degree(x)) +
                             ", expected " + k.str());
      break;
    }
  }

  // p(x) = (x^2 - (theta + tau) x + theta tau)(x + 1)(x - k); coefficients must be integers.
  const Surd s1 = p.theta + p.tau;
  const Surd s2 = p.theta * p.tau;
  if (!s1.is_integer() || !s2.is_integer()) {
    out.failures.push_back("theta + tau or theta * tau is not an integer");
    out.ok = false;
    return out;
  }
  const BigInt a = -s1.to_integer();
  const BigInt b = s2.to_integer();
  // (x^2 + a x + b)(x + 1) = x^3 + (a+1) x^2 + (a+b) x + b
  const BigInt q2 = a + 1;
  const BigInt q1 = a + b;
  const BigInt q0 = b;
  // times (x - k)
  const std::vector<BigInt> coeff_big = {1, q2 - k, q1 - k * q2, q0 - k * q1, -k * q0};  // x^4 .. x^0
  std::vector<long long> coeff;
  for (const auto& c : coeff_big) {
    if (boost::multiprecision::abs(c) > BigInt(1) << 40) {
      out.failures.push_back("minimal-polynomial coefficients too large for the matrix check");
      out.ok = false;
      return out;
    }
    coeff.push_back(static_cast<long long>(c));
  }

  if (out.failures.empty()) {
    // p(A) e_j by Horner with sparse products, one column per j.
    std::vector<int> bad_column(chunk_count(v), -1);
    parallel_chunks(v, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
      std::vector<long long> y(v);
      std::vector<long long> next(v);
      for (std::size_t j = begin; j < end && bad_column[chunk] < 0; ++j) {
        std::fill(y.begin(), y.end(), 0);
        y[j] = coeff[0];
        for (std::size_t c = 1; c < coeff.size(); ++c) {
          for (int x = 0; x < v; ++x) {
            long long acc = 0;
            for (int w : graph.neighbours(x)) acc += y[w];
            next[x] = acc;
          }
          next[j] += coeff[c];
          std::swap(y, next);
        }
        if (std::any_of(y.begin(), y.end(), [](long long e) { return e != 0; })) bad_column[chunk] = static_cast<int>(j);
      }
    });
    for (int j : bad_column) {
      if (j >= 0) {
        out.failures.push_back("(A - theta)(A + 1)(A - tau)(A - k) is nonzero in column " + std::to_string(j));
        break;
      }
    }
  }

  // Traces of A, A^2, A^3 against the model spectrum.
  BigInt tr1 = 0;
  BigInt tr2 = 0;
  BigInt tr3 = 0;
  for (int x = 0; x < v; ++x) {
    tr2 += graph.degree(x);
    for (int w : graph.neighbours(x)) tr3 += static_cast<long long>(kernels::and_popcount(graph.row(x), graph.row(w)));
  }
  const BigInt n = p.n;
  Surd power_k = Surd(k);
  Surd power_theta = p.theta;
  Surd power_tau = p.tau;
  long long power_minus = -1;
  const BigInt actual[3] = {tr1, tr2, tr3};
  for (int j = 1; j <= 3; ++j) {
    const Surd model = power_k + p.m_theta * power_theta + Surd(BigInt((n - 1) * power_minus)) + p.m_tau * power_tau;
    if (!(model == Surd(actual[j - 1]))) {
      out.failures.push_back("tr(A^" + std::to_string(j) + ") = " + actual[j - 1].str() + " but the model spectrum gives " +
                             model.to_string());
    }
    power_k = power_k * Surd(k);
    power_theta = power_theta * p.theta;
    power_tau = power_tau * p.tau;
    power_minus = -power_minus;
  }
  out.ok = out.failures.empty();
  return out;
}

}  // namespace coverlab
