#include "coverlab/jacobi.hpp"

#include "coverlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coverlab {

ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix sizes differ");
  ComplexMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      const Complex xik = x(i, k);
      if (xik == Complex{}) continue;
      for (int j = 0; j < x.n; ++j) out(i, j) += xik * y(k, j);
    }
  }
  return out;
}

double max_abs_difference(const ComplexMatrix& x, const ComplexMatrix& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& A) {
  double s = 0.0;
  for (int i = 0; i < A.n; ++i) {
    for (int j = 0; j < A.n; ++j) {
      if (i != j) s += std::norm(A(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const ComplexMatrix& input, const JacobiOptions& options) {
  const int n = input.n;
  if (n > options.max_dimension) throw std::invalid_argument("jacobi_eigen: dimension exceeds the bound");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(input(i, j) - std::conj(input(j, i))) > 1e-12) throw std::invalid_argument("jacobi_eigen: matrix is not Hermitian");
    }
  }
  ComplexMatrix A = input;
  std::vector<Complex> V(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) V[static_cast<std::size_t>(i) * n + i] = 1.0;

  double frob = 0.0;
  for (const auto& z : A.a) frob += std::norm(z);
  const double stop = options.threshold * std::max(1.0, std::sqrt(frob));

  EigenDecomposition out;
  out.n = n;
  for (int i = 0; i < n; ++i) A(i, i) = A(i, i).real();
  while ((out.off_norm = off_diagonal_norm(A)) > stop) {
    if (out.sweeps >= options.max_sweeps) throw std::runtime_error("jacobi_eigen: no convergence");
    ++out.sweeps;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex b = A(p, q);
        const double beta = std::abs(b);
        if (beta < 1e-300) continue;
        const Complex phase = b / beta;  // e^{i phi}
        const double a = A(p, p).real();
        const double d = A(q, q).real();
        const double zeta = (d - a) / (2.0 * beta);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = [[c, s e^{i phi}], [-s e^{-i phi}, c]]; A <- J^H A J, V <- V J.
        std::span<Complex> row_p(&A(p, 0), n);
        std::span<Complex> row_q(&A(q, 0), n);
        kernels::combine_pair(row_p, row_q, c, s * std::conj(phase), -s * phase, c);
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          A(i, p) = std::conj(A(p, i));
          A(i, q) = std::conj(A(q, i));
        }
        A(p, p) = a - t * beta;
        A(q, q) = d + t * beta;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        std::span<Complex> col_p(V.data() + static_cast<std::size_t>(p) * n, n);
        std::span<Complex> col_q(V.data() + static_cast<std::size_t>(q) * n, n);
        kernels::combine_pair(col_p, col_q, c, s * phase, -s * std::conj(phase), c);
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x).real() < A(y, y).real(); });
  out.values.resize(n);
  out.vectors.resize(V.size());
  for (int k = 0; k < n; ++k) {
    out.values[k] = A(order[k], order[k]).real();
    std::copy_n(V.data() + static_cast<std::size_t>(order[k]) * n, n, out.vectors.data() + static_cast<std::size_t>(k) * n);
  }
  return out;
}

}  // namespace coverlab
