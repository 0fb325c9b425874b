#pragma once

#include <cstddef>
#include <cstdint>

namespace modsym::simd {

namespace scalar {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n, std::uint32_t p);
void scale_mod(std::uint32_t* v, std::uint32_t s, std::size_t n, std::uint32_t p);
}  // namespace scalar

#if defined(MODSYM_HAVE_AVX2)
namespace avx2 {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n, std::uint32_t p);
void scale_mod(std::uint32_t* v, std::uint32_t s, std::size_t n, std::uint32_t p);
}  // namespace avx2
#endif

// Barrett-style reduction for x < 2^12 and p <= 61: floor(x * m / 2^20) is
// exactly floor(x / p) with m = ceil(2^20 / p), since x * (m*p - 2^20) < 2^20.
constexpr std::uint32_t kReduceShift = 20;
constexpr std::uint32_t reduce_magic(std::uint32_t p) { return ((1u << kReduceShift) + p - 1) / p; }

}  // namespace modsym::simd
