#pragma once

#include "coverlab/params.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coverlab {

/// Malformed input: bad vertex ids, loops, or a fibre list that is not a
/// partition into equal blocks. Distinct from a failed cover axiom.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..v-1 with bit-row adjacency.
class Graph {
 public:
  Graph() = default;
  /// Duplicate edges are merged. Throws StructuralError on loops or ids out
  /// of range.
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  bool adjacent(int u, int v) const { return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U; }
  std::span<const std::uint64_t> row(int u) const { return {bits_.data() + row_offset(u), words_}; }
  std::size_t words_per_row() const { return words_; }
  const std::vector<int>& neighbours(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }
  std::size_t edge_count() const { return edge_count_; }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge_toggled(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  std::size_t row_offset(int u) const { return static_cast<std::size_t>(u) * words_; }

  int n_ = 0;
  std::size_t words_ = 0;  // padded to a multiple of 4 words
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Graph with a fibre partition. Fibres are canonicalized on construction:
/// each block sorted, blocks ordered by minimum element.
class CoverGraph {
 public:
  /// Throws StructuralError unless `fibres` partitions the vertex set into
  /// n >= 3 blocks of one common size r >= 2. Edges inside fibres are allowed
  /// here; verify_cover reports them.
  CoverGraph(Graph graph, std::vector<std::vector<int>> fibres);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int fibre_count() const { return static_cast<int>(fibres_.size()); }
  int fibre_size() const { return fibres_.empty() ? 0 : static_cast<int>(fibres_.front().size()); }
  const std::vector<std::vector<int>>& fibres() const { return fibres_; }
  int fibre_of(int v) const { return fibre_of_[v]; }
  std::span<const std::uint64_t> fibre_mask(int f) const {
    return {masks_.data() + static_cast<std::size_t>(f) * graph_.words_per_row(), graph_.words_per_row()};
  }

  CoverGraph with_edge_toggled(int u, int v) const { return {graph_.with_edge_toggled(u, v), fibres_}; }

  friend bool operator==(const CoverGraph& a, const CoverGraph& b) {
    return a.graph_ == b.graph_ && a.fibres_ == b.fibres_;
  }

 private:
  Graph graph_;
  std::vector<std::vector<int>> fibres_;
  std::vector<int> fibre_of_;
  std::vector<std::uint64_t> masks_;
};

enum class Axiom {
  kConnected,
  kFibreCoclique,
  kPerfectMatching,
  kConstantMu,
  kConstantLambda,
};

std::string to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::vector<int> witness;
  std::string detail;
};

struct CoverReport {
  bool is_cover = false;
  int n = 0;
  int r = 0;
  std::optional<int> mu;
  std::optional<int> lambda;
  std::vector<Violation> failures;
  /// Violations found per axiom before truncation to the cap.
  std::vector<std::pair<Axiom, std::size_t>> violation_totals;
  bool antipodality_confirmed = false;
  int diameter = -1;  // -1 when disconnected
};

struct VerifyOptions {
  std::size_t max_violations_per_axiom = 10;
};

/// Checks, in order: connectivity, fibres are cocliques, every two fibres
/// induce a perfect matching, constant mu >= 1 on non-adjacent pairs in
/// distinct fibres, and constant lambda = n - (r-1) mu - 2 on edges.
CoverReport verify_cover(const CoverGraph& g, const VerifyOptions& options = {});

/// All-pairs distances (BFS), -1 for unreachable pairs.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);
  int operator()(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int vertex_count() const { return n_; }
  bool connected() const { return connected_; }
  int diameter() const { return diameter_; }

 private:
  int n_ = 0;
  std::vector<std::int16_t> dist_;
  bool connected_ = true;
  int diameter_ = 0;
};

std::vector<int> bfs_distances(const Graph& g, int source);

/// BFS layers Gamma_0(v), Gamma_1(v), ... Throws std::invalid_argument when
/// g is disconnected.
std::vector<std::vector<int>> distance_classes(const Graph& g, int v);
/// As above, additionally requiring eccentricity 3 as every cover vertex has.
std::vector<std::vector<int>> distance_classes(const CoverGraph& g, int v);

/// Raised when "equal or at distance 3" is not an equivalence relation, or
/// the graph is not connected of diameter 3.
class NotAntipodalError : public std::runtime_error {
 public:
  NotAntipodalError(const std::string& what, std::vector<int> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

/// Distance-3 closure classes, canonically ordered.
std::vector<std::vector<int>> antipodal_classes(const Graph& g);

struct SpectrumCheck {
  bool ok = false;
  std::vector<std::string> failures;
};

/// Exact check that A satisfies (A - theta)(A + 1)(A - tau)(A - k) = 0 and that
/// tr(A^j), j = 1..3, match the model spectrum of `p`.
SpectrumCheck spectrum_check(const CoverGraph& g, const CoverParams& p);

}  // namespace coverlab
