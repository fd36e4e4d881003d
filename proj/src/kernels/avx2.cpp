#include "coverlab/kernels.hpp"

#include <immintrin.h>

namespace coverlab::kernels::avx2 {

namespace {

// Per-byte popcount through a nibble lookup table, summed with SAD.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline __m256d complex_scale(__m256d z, std::complex<double> c) {
  const __m256d re = _mm256_set1_pd(c.real());
  const __m256d im = _mm256_set1_pd(c.imag());
  const __m256d swapped = _mm256_permute_pd(z, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(re, z), _mm256_mul_pd(im, swapped));
}

}  // namespace

bool compiled() { return true; }

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(_mm256_and_si256(va, vb)),
                                                _mm256_setzero_si256()));
  }
  std::size_t total = static_cast<std::size_t>(_mm256_extract_epi64(acc, 0)) +
                      static_cast<std::size_t>(_mm256_extract_epi64(acc, 1)) +
                      static_cast<std::size_t>(_mm256_extract_epi64(acc, 2)) +
                      static_cast<std::size_t>(_mm256_extract_epi64(acc, 3));
  for (; i < words; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

void combine_pair(std::complex<double>* x, std::complex<double>* y, std::size_t len,
                  std::complex<double> c00, std::complex<double> c01, std::complex<double> c10,
                  std::complex<double> c11) {
  auto* xd = reinterpret_cast<double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(xd + 2 * i, _mm256_add_pd(complex_scale(xv, c00), complex_scale(yv, c10)));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(complex_scale(xv, c01), complex_scale(yv, c11)));
  }
  if (i < len) scalar::combine_pair(x + i, y + i, len - i, c00, c01, c10, c11);
}

}  // namespace coverlab::kernels::avx2
