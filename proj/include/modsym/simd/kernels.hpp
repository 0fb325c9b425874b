#pragma once

// Inner-loop kernels for exact linear algebra.
//
// Every kernel has a portable scalar reference implementation and, where the
// build and the CPU allow it, an AVX2 variant. The active table is chosen at
// first use from CPU detection; results are bit-identical across variants
// (enforced by the kernel equivalence tests).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace modsym::simd {

enum class Isa { scalar, avx2 };

struct Kernels {
  Isa isa;
  // dst[i] ^= src[i]
  void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  // parity of popcount(a & b) over n words
  bool (*and_parity)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // dst[i] = (dst[i] + s * src[i]) mod p, with p <= 61 and all inputs reduced
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n, std::uint32_t p);
  // v[i] = (s * v[i]) mod p
  void (*scale_mod)(std::uint32_t* v, std::uint32_t s, std::size_t n, std::uint32_t p);
};

const Kernels& scalar_kernels();
// nullptr when the build has no AVX2 variant or the CPU lacks AVX2.
const Kernels* avx2_kernels();

const Kernels& active();
// Pins the active table (tests and benchmarks). Throws std::invalid_argument
// if the requested ISA is unavailable.
void set_active(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace modsym::simd
