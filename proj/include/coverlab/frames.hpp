#pragma once

#include "coverlab/graph.hpp"
#include "coverlab/jacobi.hpp"
#include "coverlab/perm_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coverlab {

/// Linear character of an abelian permutation group K: chi(k_i) =
/// exp(2 pi i values[i] / exponent) for the elements k_i listed by
/// abelian_characters().
struct Character {
  int exponent = 1;
  std::vector<int> values;
  bool trivial = false;
  bool faithful = false;
  int kernel_order = 0;
};

struct CharacterTable {
  std::vector<Permutation> elements;  // identity first
  int exponent = 1;
  std::vector<Character> characters;  // trivial first, then lexicographic by generator values
};

/// Throws std::invalid_argument when K is not abelian or has order above 4096.
CharacterTable abelian_characters(const PermGroup& K);

struct CharacterMatrix {
  int n = 0;
  ComplexMatrix S;
  /// S(F, F') = exp(2 pi i exponents[F][F'] / exponent); -1 on the diagonal.
  std::vector<std::vector<int>> exponents;
  int exponent = 1;
  std::vector<int> base_vertices;  // least vertex of each fibre
};

/// S(F, F') = chi(g) where g in K sends the neighbour of b_F in F' to b_F'.
/// Throws std::invalid_argument when K is not abelian and regular on every
/// fibre, or chi is trivial.
CharacterMatrix character_matrix(const CoverGraph& g, const CharacterTable& table, const Character& chi);
CharacterMatrix character_matrix(const CoverGraph& g, const PermGroup& K, std::size_t character_index);

struct SpectrumCertificate {
  std::vector<double> eigenvalues;
  int count_theta = 0;
  int count_tau = 0;
  double max_deviation = 0.0;  // largest distance of an eigenvalue from {theta, tau}
  bool ok = false;
};

/// Every eigenvalue must lie within `tol` of theta or tau.
SpectrumCertificate certify_spectrum(const ComplexMatrix& S, double theta, double tau, double tol = 1e-8);

enum class LineSide { kTheta, kTau };

struct LineSystem {
  int n = 0;
  int d = 0;
  double alpha = 0.0;
  ComplexMatrix gram;
};

/// Projection onto the theta- or tau-eigenspace of S, rescaled to unit
/// diagonal. Throws std::runtime_error when the spectrum certificate fails.
LineSystem extract_lines(const ComplexMatrix& S, double theta, double tau, LineSide side, double cluster_tol = 1e-8);

struct TauContext {
  double tau = 0.0;
  int n = 0;
  int r = 0;
};

struct EtfReport {
  double equiangular_deviation = 0.0;
  bool equiangular = false;
  double tight_residual = 0.0;
  bool tight = false;
  double relative_bound_residual = 0.0;
  bool relative_bound_equality = false;
  double angle_identity_residual = 0.0;
  bool sic = false;  // n = d^2
  double imaginary_max = 0.0;
  bool real = false;
  bool real_absolute_bound = false;  // real and n = d(d+1)/2
  bool absolute_bound_attained = false;  // complex bound n = d^2
  std::optional<double> tau_lower;
  std::optional<double> tau_upper;
  std::string tau_endpoint;  // "lower", "upper", "interior", "outside" or empty
  bool ok = false;  // equiangular, tight and relative-bound equality
};

EtfReport verify_etf(const LineSystem& lines, double tol = 1e-9, std::optional<TauContext> tau = std::nullopt);

}  // namespace coverlab
