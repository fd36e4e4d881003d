#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference in
// `kernels::scalar` and, on x86-64 builds, an AVX2 variant in `kernels::avx2`.
// The unqualified entry points dispatch at runtime on the detected ISA.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace coverlab::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

/// Best ISA supported by both the build and the running CPU.
Isa detected_isa();
/// ISA currently used by the dispatching entry points. Defaults to
/// detected_isa(); the environment variable COVERLAB_ISA=scalar forces the
/// scalar path.
Isa active_isa();
/// Overrides the dispatch target. Requesting an ISA the CPU lacks falls back
/// to scalar. Intended for equivalence tests.
void set_active_isa(Isa isa);

/// popcount(a & b) over equally sized word spans.
std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// In-place 2x2 complex update of two vectors:
///   x' = c00 * x + c10 * y
///   y' = c01 * x + c11 * y
/// i.e. [x' y'] = [x y] * C. Used for Jacobi column rotations.
void combine_pair(std::span<std::complex<double>> x, std::span<std::complex<double>> y,
                  std::complex<double> c00, std::complex<double> c01, std::complex<double> c10,
                  std::complex<double> c11);

namespace scalar {
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void combine_pair(std::complex<double>* x, std::complex<double>* y, std::size_t len,
                  std::complex<double> c00, std::complex<double> c01, std::complex<double> c10,
                  std::complex<double> c11);
}  // namespace scalar

namespace avx2 {
/// False when the library was built without the AVX2 translation unit.
bool compiled();
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void combine_pair(std::complex<double>* x, std::complex<double>* y, std::size_t len,
                  std::complex<double> c00, std::complex<double> c01, std::complex<double> c10,
                  std::complex<double> c11);
}  // namespace avx2

}  // namespace coverlab::kernels
