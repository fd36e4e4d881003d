#include "coverlab/constructions.hpp"

#include "coverlab/galois_field.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace coverlab {

CoverGraph hexagon() {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) edges.emplace_back(std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6));
  return CoverGraph(Graph(6, edges), {{0, 3}, {1, 4}, {2, 5}});
}

CoverGraph cube() {
  std::vector<Edge> edges;
  for (int x = 0; x < 8; ++x) {
    for (int b = 0; b < 3; ++b) {
      const int y = x ^ (1 << b);
      if (x < y) edges.emplace_back(x, y);
    }
  }
  return CoverGraph(Graph(8, edges), {{0, 7}, {1, 6}, {2, 5}, {3, 4}});
}

CoverGraph icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> pts;
  for (int shift = 0; shift < 3; ++shift) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        std::array<double, 3> p{0.0, s1 * 1.0, s2 * phi};
        std::array<double, 3> rotated{};
        for (int i = 0; i < 3; ++i) rotated[(i + shift) % 3] = p[i];
        pts.push_back(rotated);
      }
    }
  }
  auto dist2 = [&](int a, int b) {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += (pts[a][i] - pts[b][i]) * (pts[a][i] - pts[b][i]);
    return s;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> fibres;
  for (int a = 0; a < 12; ++a) {
    for (int b = a + 1; b < 12; ++b) {
      if (std::abs(dist2(a, b) - 4.0) < 1e-9) edges.emplace_back(a, b);
      if (std::abs(dist2(a, b) - 4.0 * (phi * phi + 1.0)) < 1e-9) fibres.push_back({a, b});
    }
  }
  return CoverGraph(Graph(12, edges), std::move(fibres));
}

ThasSommaCover thas_somma_full(int q, int m, int max_vertices) {
  if (m < 1) throw std::invalid_argument("thas_somma: m must be at least 1");
  if (!GaloisField::is_prime_power(q)) throw std::invalid_argument("thas_somma: q = " + std::to_string(q) + " is not a prime power");
  const GaloisField F(q);
  const int dim = 2 * m;
  long long points = 1;
  for (int i = 0; i < dim; ++i) points *= q;
  if (points * q > max_vertices) {
    throw std::invalid_argument("thas_somma: " + std::to_string(points * q) + " vertices exceed the bound " +
                                std::to_string(max_vertices));
  }
  const int np = static_cast<int>(points);
  const int v = np * q;

  std::vector<std::vector<int>> coords(np, std::vector<int>(dim));
  for (int u = 0; u < np; ++u) {
    int x = u;
    for (int i = 0; i < dim; ++i, x /= q) coords[u][i] = x % q;
  }
  auto index = [&](const std::vector<int>& c) {
    int u = 0;
    for (int i = dim; i-- > 0;) u = u * q + c[i];
    return u;
  };
  auto form = [&](int u, int w) {
    int s = 0;
    for (int i = 0; i < m; ++i) {
      s = F.add(s, F.mul(coords[u][2 * i], coords[w][2 * i + 1]));
      s = F.sub(s, F.mul(coords[u][2 * i + 1], coords[w][2 * i]));
    }
    return s;
  };

  std::vector<Edge> edges;
  for (int u = 0; u < np; ++u) {
    for (int w = u + 1; w < np; ++w) {
      const int b_minus_a = form(u, w);
      for (int a = 0; a < q; ++a) edges.emplace_back(u * q + a, w * q + F.add(a, b_minus_a));
    }
  }
  std::vector<std::vector<int>> fibres(np);
  for (int u = 0; u < np; ++u) {
    for (int a = 0; a < q; ++a) fibres[u].push_back(u * q + a);
  }

  ThasSommaCover out{q, m, CoverGraph(Graph(v, edges), std::move(fibres)), {}, {}};
  for (int c : F.additive_basis()) {
    std::vector<int> img(v);
    for (int u = 0; u < np; ++u) {
      for (int a = 0; a < q; ++a) img[u * q + a] = u * q + F.add(a, c);
    }
    out.covering_generators.emplace_back(std::move(img));
  }
  for (int i = 0; i < dim; ++i) {
    for (int c : F.additive_basis()) {
      std::vector<int> shift(dim, 0);
      shift[i] = c;
      const int w = index(shift);
      std::vector<int> img(v);
      for (int u = 0; u < np; ++u) {
        std::vector<int> sum(dim);
        for (int j = 0; j < dim; ++j) sum[j] = F.add(coords[u][j], shift[j]);
        const int target = index(sum);
        const int lift = form(w, u);
        for (int a = 0; a < q; ++a) img[u * q + a] = target * q + F.add(a, lift);
      }
      out.translation_generators.emplace_back(std::move(img));
    }
  }
  return out;
}

CoverGraph thas_somma(int q, int m, int max_vertices) { return thas_somma_full(q, m, max_vertices).cover; }

void validate_seidel(const SeidelMatrix& S) {
  const std::size_t n = S.size();
  if (n < 3) throw std::invalid_argument("Seidel matrix must have at least 3 rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (S[i].size() != n) throw std::invalid_argument("Seidel matrix is not square");
    if (S[i][i] != 0) throw std::invalid_argument("Seidel matrix has a nonzero diagonal entry");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (S[i][j] != 1 && S[i][j] != -1) throw std::invalid_argument("Seidel matrix entries must be +-1 off the diagonal");
      if (S[i][j] != S[j][i]) throw std::invalid_argument("Seidel matrix is not symmetric");
    }
  }
}

CoverGraph taylor_from_seidel(const SeidelMatrix& S, TaylorSign sign) {
  validate_seidel(S);
  const int n = static_cast<int>(S.size());
  const int flip = sign == TaylorSign::kNegated ? -1 : 1;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int product = flip * S[i][j];  // required e * d
      if (product == 1) {
        edges.emplace_back(i, j);
        edges.emplace_back(n + i, n + j);
      } else {
        edges.emplace_back(i, n + j);
        edges.emplace_back(j, n + i);
      }
    }
  }
  std::vector<std::vector<int>> fibres;
  for (int i = 0; i < n; ++i) fibres.push_back({i, n + i});
  return CoverGraph(Graph(2 * n, edges), std::move(fibres));
}

SeidelMatrix seidel_from_double_cover(const CoverGraph& g, TaylorSign sign) {
  if (g.fibre_size() != 2) throw std::invalid_argument("seidel_from_double_cover needs fibres of size 2");
  const int n = g.fibre_count();
  const int flip = sign == TaylorSign::kNegated ? -1 : 1;
  SeidelMatrix S(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool same_side = g.graph().adjacent(g.fibres()[i].front(), g.fibres()[j].front());
      S[i][j] = flip * (same_side ? 1 : -1);
    }
  }
  return S;
}

SeidelMatrix seidel_from_graph(const Graph& g) {
  const int n = g.vertex_count();
  SeidelMatrix S(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) S[i][j] = g.adjacent(i, j) ? -1 : 1;
    }
  }
  return S;
}

}  // namespace coverlab
