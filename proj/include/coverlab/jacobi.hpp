#pragma once

#include <complex>
#include <vector>

namespace coverlab {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
struct ComplexMatrix {
  int n = 0;
  std::vector<Complex> a;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
  Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Complex& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y);
/// max |x_ij - y_ij|
double max_abs_difference(const ComplexMatrix& x, const ComplexMatrix& y);

struct JacobiOptions {
  double threshold = 1e-13;  // on the off-diagonal Frobenius norm, relative to max(1, ||A||_F)
  int max_sweeps = 100;
  int max_dimension = 512;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  /// Column-major: eigenvector k occupies vectors[k*n .. k*n + n).
  std::vector<Complex> vectors;
  int n = 0;
  int sweeps = 0;
  double off_norm = 0.0;

  const Complex* vector(int k) const { return vectors.data() + static_cast<std::size_t>(k) * n; }
};

/// Cyclic Jacobi for Hermitian matrices. Throws std::invalid_argument when A
/// is not Hermitian (to 1e-12) or too large, std::runtime_error when the
/// sweeps do not converge.
EigenDecomposition jacobi_eigen(const ComplexMatrix& A, const JacobiOptions& options = {});

}  // namespace coverlab
