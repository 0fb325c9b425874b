// Compiled with -mavx2; only reached after a runtime CPU check.
#include "kernels_impl.hpp"

#include <immintrin.h>

#include <bit>

namespace modsym::simd::avx2 {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; i < n; ++i) folded ^= a[i] & b[i];
  return std::popcount(folded) & 1;
}

namespace {

inline __m256i reduce(__m256i x, __m256i magic, __m256i p) {
  const __m256i quot = _mm256_srli_epi32(_mm256_mullo_epi32(x, magic), kReduceShift);
  return _mm256_sub_epi32(x, _mm256_mullo_epi32(quot, p));
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n, std::uint32_t p) {
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(reduce_magic(p)));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(vs, x));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(t, vm, vp));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + s * src[i]) % p;
}

void scale_mod(std::uint32_t* v, std::uint32_t s, std::size_t n, std::uint32_t p) {
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(reduce_magic(p)));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), reduce(_mm256_mullo_epi32(vs, x), vm, vp));
  }
  for (; i < n; ++i) v[i] = (s * v[i]) % p;
}

}  // namespace modsym::simd::avx2
