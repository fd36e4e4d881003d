#pragma once

#include "coverlab/graph.hpp"
#include "coverlab/permutation.hpp"

#include <vector>

namespace coverlab {

/// C_6 with antipodal fibres {i, i+3}: a (3,2,1)-cover.
CoverGraph hexagon();
/// The 3-cube on bit strings 0..7 with fibres {x, x^7}: a (4,2,2)-cover.
CoverGraph cube();
/// The icosahedron from the coordinates (0, +-1, +-phi) and cyclic shifts,
/// fibres are antipodal pairs: a (6,2,2)-cover.
CoverGraph icosahedron();

inline constexpr int kDefaultConstructionVertexBound = 1024;

struct ThasSommaCover {
  int q = 0;
  int m = 0;
  CoverGraph cover;
  /// (u, a) -> (u, a + c) for c in an additive basis of F_q.
  std::vector<Permutation> covering_generators;
  /// (u, a) -> (u + w, a + B(w, u)) for w in an additive basis of F_q^{2m}.
  std::vector<Permutation> translation_generators;
};

/// Vertices (u, a) in F_q^{2m} x F_q, numbered index(u) * q + a; (u, a) ~ (v, b)
/// iff u != v and b - a = B(u, v) for the standard symplectic form B.
/// Throws std::invalid_argument for unsupported q, m < 1, or more than
/// `max_vertices` vertices.
ThasSommaCover thas_somma_full(int q, int m, int max_vertices = kDefaultConstructionVertexBound);
CoverGraph thas_somma(int q, int m, int max_vertices = kDefaultConstructionVertexBound);

using SeidelMatrix = std::vector<std::vector<int>>;

/// Sign rule of the double cover. kNegated: (e, i) ~ (d, j) iff e d = -S_ij,
/// so S_ij = -1 joins (+,i) and (+,j). kDirect: e d = S_ij.
enum class TaylorSign { kNegated, kDirect };

/// Throws std::invalid_argument unless S is symmetric with zero diagonal and
/// +-1 entries elsewhere, n >= 3.
void validate_seidel(const SeidelMatrix& S);

/// Double cover on (+, i) = i and (-, i) = n + i with fibres {i, n + i}.
CoverGraph taylor_from_seidel(const SeidelMatrix& S, TaylorSign sign = TaylorSign::kNegated);

/// Inverse of taylor_from_seidel for r = 2 covers, taking the least vertex
/// of each fibre as its (+) copy.
SeidelMatrix seidel_from_double_cover(const CoverGraph& g, TaylorSign sign = TaylorSign::kNegated);

/// S_ij = -1 for adjacent i, j and +1 otherwise.
SeidelMatrix seidel_from_graph(const Graph& g);

}  // namespace coverlab
