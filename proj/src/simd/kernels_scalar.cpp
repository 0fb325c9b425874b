#include "kernels_impl.hpp"

#include <bit>

namespace modsym::simd::scalar {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + s * src[i]) % p;
}

void scale_mod(std::uint32_t* v, std::uint32_t s, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) v[i] = (s * v[i]) % p;
}

}  // namespace modsym::simd::scalar
