#include "coverlab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace coverlab::kernels {

#ifndef COVERLAB_WITH_AVX2
namespace avx2 {
bool compiled() { return false; }
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  return scalar::and_popcount(a, b, words);
}
void combine_pair(std::complex<double>* x, std::complex<double>* y, std::size_t len,
                  std::complex<double> c00, std::complex<double> c01, std::complex<double> c10,
                  std::complex<double> c11) {
  scalar::combine_pair(x, y, len, c00, c01, c10, c11);
}
}  // namespace avx2
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("COVERLAB_ISA"); env != nullptr && std::string(env) == "scalar") {
    return Isa::kScalar;
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() { return avx2::compiled() && cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) isa = Isa::kScalar;
  active().store(isa, std::memory_order_relaxed);
}

std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("and_popcount: span sizes differ");
  if (active_isa() == Isa::kAvx2) return avx2::and_popcount(a.data(), b.data(), a.size());
  return scalar::and_popcount(a.data(), b.data(), a.size());
}

void combine_pair(std::span<std::complex<double>> x, std::span<std::complex<double>> y,
                  std::complex<double> c00, std::complex<double> c01, std::complex<double> c10,
                  std::complex<double> c11) {
  if (x.size() != y.size()) throw std::invalid_argument("combine_pair: span sizes differ");
  if (active_isa() == Isa::kAvx2) {
    avx2::combine_pair(x.data(), y.data(), x.size(), c00, c01, c10, c11);
  } else {
    scalar::combine_pair(x.data(), y.data(), x.size(), c00, c01, c10, c11);
  }
}

}  // namespace coverlab::kernels
