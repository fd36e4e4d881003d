#include "coverlab/kernels.hpp"

#include <bit>

namespace coverlab::kernels::scalar {

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void combine_pair(std::complex<double>* x, std::complex<double>* y, std::size_t len,
                  std::complex<double> c00, std::complex<double> c01, std::complex<double> c10,
                  std::complex<double> c11) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::complex<double> xi = x[i];
    const std::complex<double> yi = y[i];
    x[i] = c00 * xi + c10 * yi;
    y[i] = c01 * xi + c11 * yi;
  }
}

}  // namespace coverlab::kernels::scalar
