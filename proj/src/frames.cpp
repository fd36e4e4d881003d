#include "coverlab/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace coverlab {

namespace {

constexpr std::size_t kMaxCharacterGroup = 4096;

Complex root_of_unity(int k, int e) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(e);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

CharacterTable abelian_characters(const PermGroup& K) {
  if (!K.is_abelian()) throw std::invalid_argument("characters: group is not abelian");
  if (K.order() > kMaxCharacterGroup) throw std::invalid_argument("characters: group too large");
  CharacterTable table;
  table.elements = K.elements(kMaxCharacterGroup);
  const Permutation id = Permutation::identity(K.degree());
  std::iter_swap(table.elements.begin(), std::find(table.elements.begin(), table.elements.end(), id));
  const std::size_t order = table.elements.size();
  auto index_of = [&](const Permutation& x) {
    return static_cast<std::size_t>(std::find(table.elements.begin(), table.elements.end(), x) - table.elements.begin());
  };

  std::vector<Permutation> gens;
  for (const auto& g : K.generators()) {
    if (!g.is_identity()) gens.push_back(g);
  }
  std::vector<int> gen_order;
  int exponent = 1;
  for (const auto& g : gens) {
    gen_order.push_back(static_cast<int>(g.order()));
    exponent = std::lcm(exponent, gen_order.back());
  }
  table.exponent = exponent;

  // Cayley-graph successor tables.
  std::vector<std::vector<std::size_t>> next(gens.size(), std::vector<std::size_t>(order));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < order; ++i) next[j][i] = index_of(table.elements[i] * gens[j]);
  }

  std::vector<int> assign(gens.size(), 0);
  while (true) {
    // Propagate chi(x g_j) = chi(x) + assign[j] and test consistency.
    std::vector<int> value(order, -1);
    value[0] = 0;
    std::vector<std::size_t> queue{0};
    bool consistent = true;
    for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
      const std::size_t x = queue[head];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t y = next[j][x];
        const int vy = (value[x] + assign[j]) % exponent;
        if (value[y] < 0) {
          value[y] = vy;
          queue.push_back(y);
        } else if (value[y] != vy) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      Character chi;
      chi.exponent = exponent;
      chi.values = value;
      chi.kernel_order = static_cast<int>(std::count(value.begin(), value.end(), 0));
      chi.trivial = chi.kernel_order == static_cast<int>(order);
      chi.faithful = chi.kernel_order == 1;
      table.characters.push_back(std::move(chi));
    }
    // Next assignment: generator j takes multiples of exponent / ord(g_j).
    std::size_t j = gens.size();
    while (j-- > 0) {
      const int step = exponent / gen_order[j];
      assign[j] += step;
      if (assign[j] < exponent) break;
      assign[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return table;
}

CharacterMatrix character_matrix(const CoverGraph& g, const CharacterTable& table, const Character& chi) {
  if (chi.trivial) throw std::invalid_argument("character_matrix: character is trivial");
  const int n = g.fibre_count();
  const int r = g.fibre_size();
  if (table.elements.size() != static_cast<std::size_t>(r)) {
    throw std::invalid_argument("character_matrix: covering group order differs from the fibre size");
  }
  for (const auto& k : table.elements) {
    for (int x = 0; x < g.vertex_count(); ++x) {
      if (g.fibre_of(k(x)) != g.fibre_of(x)) throw std::invalid_argument("character_matrix: group does not fix the fibres");
    }
  }
  for (const auto& f : g.fibres()) {
    std::vector<int> images;
    for (const auto& k : table.elements) images.push_back(k(f.front()));
    std::sort(images.begin(), images.end());
    if (images != f) throw std::invalid_argument("character_matrix: covering group is not regular on a fibre");
  }

  CharacterMatrix out;
  out.n = n;
  out.S = ComplexMatrix(n);
  out.exponent = chi.exponent;
  out.exponents.assign(n, std::vector<int>(n, -1));
  for (const auto& f : g.fibres()) out.base_vertices.push_back(f.front());
  for (int F = 0; F < n; ++F) {
    const int b = out.base_vertices[F];
    for (int w : g.graph().neighbours(b)) {
      const int H = g.fibre_of(w);
      if (H == F) continue;
      const int target = out.base_vertices[H];
      std::size_t idx = 0;
      while (idx < table.elements.size() && table.elements[idx](w) != target) ++idx;
      if (idx == table.elements.size()) throw std::logic_error("character_matrix: no group element matches");
      out.exponents[F][H] = chi.values[idx];
      out.S(F, H) = root_of_unity(chi.values[idx], chi.exponent);
    }
  }
  for (int F = 0; F < n; ++F) {
    for (int H = 0; H < n; ++H) {
      if (F != H && out.exponents[F][H] < 0) throw std::invalid_argument("character_matrix: fibres are not perfectly matched");
    }
  }
  return out;
}

CharacterMatrix character_matrix(const CoverGraph& g, const PermGroup& K, std::size_t character_index) {
  const CharacterTable table = abelian_characters(K);
  if (character_index >= table.characters.size()) throw std::invalid_argument("character index out of range");
  return character_matrix(g, table, table.characters[character_index]);
}

SpectrumCertificate certify_spectrum(const ComplexMatrix& S, double theta, double tau, double tol) {
  SpectrumCertificate out;
  out.eigenvalues = jacobi_eigen(S).values;
  for (double x : out.eigenvalues) {
    const double dt = std::abs(x - theta);
    const double du = std::abs(x - tau);
    out.max_deviation = std::max(out.max_deviation, std::min(dt, du));
    if (dt <= tol) ++out.count_theta;
    else if (du <= tol) ++out.count_tau;
  }
  out.ok = out.count_theta + out.count_tau == S.n;
  return out;
}

LineSystem extract_lines(const ComplexMatrix& S, double theta, double tau, LineSide side, double cluster_tol) {
  const EigenDecomposition eig = jacobi_eigen(S);
  const int n = S.n;
  const double target = side == LineSide::kTheta ? theta : tau;
  const double other = side == LineSide::kTheta ? tau : theta;
  std::vector<int> chosen;
  for (int k = 0; k < n; ++k) {
    const double x = eig.values[k];
    if (std::abs(x - target) <= cluster_tol) chosen.push_back(k);
    else if (std::abs(x - other) > cluster_tol) {
      throw std::runtime_error("extract_lines: eigenvalue " + std::to_string(x) + " is neither theta nor tau");
    }
  }
  if (chosen.empty()) throw std::runtime_error("extract_lines: chosen eigenspace is empty");

  ComplexMatrix P(n);
  for (int k : chosen) {
    const Complex* vk = eig.vector(k);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) P(i, j) += vk[i] * std::conj(vk[j]);
    }
  }
  LineSystem out;
  out.n = n;
  out.d = static_cast<int>(chosen.size());
  out.gram = ComplexMatrix(n);
  std::vector<double> scale(n);
  for (int i = 0; i < n; ++i) scale[i] = 1.0 / std::sqrt(P(i, i).real());
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.gram(i, j) = i == j ? Complex(1.0) : P(i, j) * scale[i] * scale[j];
      if (i != j) sum += std::abs(out.gram(i, j));
    }
  }
  out.alpha = n > 1 ? sum / (static_cast<double>(n) * (n - 1)) : 0.0;
  return out;
}

EtfReport verify_etf(const LineSystem& L, double tol, std::optional<TauContext> tau) {
  EtfReport out;
  const int n = L.n;
  const int d = L.d;
  const double alpha = L.alpha;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.imaginary_max = std::max(out.imaginary_max, std::abs(L.gram(i, j).imag()));
      if (i != j) out.equiangular_deviation = std::max(out.equiangular_deviation, std::abs(std::abs(L.gram(i, j)) - alpha));
    }
  }
  out.equiangular = out.equiangular_deviation <= tol;

  const ComplexMatrix G2 = multiply(L.gram, L.gram);
  const double ratio = static_cast<double>(n) / d;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.tight_residual = std::max(out.tight_residual, std::abs(G2(i, j) - ratio * L.gram(i, j)));
  }
  out.tight = out.tight_residual <= tol;

  const double a2 = alpha * alpha;
  if (1.0 - d * a2 > 0) {
    out.relative_bound_residual = std::abs(n - d * (1.0 - a2) / (1.0 - d * a2));
    out.relative_bound_equality = out.relative_bound_residual <= tol * std::max(1.0, static_cast<double>(n));
  } else {
    out.relative_bound_residual = std::numeric_limits<double>::infinity();
  }
  out.angle_identity_residual = n > 1 ? std::abs(a2 - static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1))) : 0.0;
  out.sic = n == d * d;
  out.real = out.imaginary_max <= tol;
  out.real_absolute_bound = out.real && 2 * n == d * (d + 1);
  out.absolute_bound_attained = out.sic;

  if (tau) {
    const double m = tau->n;
    double lower = 0.0;
    double upper = 0.0;
    if (tau->r % 2 == 1) {
      const double s = std::sqrt(m);
      lower = -(s - 1.0) * std::sqrt(s + 1.0);
      upper = -std::sqrt(s + 1.0);
    } else {
      const double s = std::sqrt(8.0 * m + 1.0);
      lower = -0.5 * std::sqrt((m - 1.0) * (s - 3.0));
      upper = -std::sqrt(0.5 * (s + 3.0));
    }
    out.tau_lower = lower;
    out.tau_upper = upper;
    if (std::abs(tau->tau - lower) <= tol) out.tau_endpoint = "lower";
    else if (std::abs(tau->tau - upper) <= tol) out.tau_endpoint = "upper";
    else if (tau->tau > lower && tau->tau < upper) out.tau_endpoint = "interior";
    else out.tau_endpoint = "outside";
  }
  out.ok = out.equiangular && out.tight && out.relative_bound_equality;
  return out;
}

}  // namespace coverlab
