#include "doctest.h"
#include "modsym/simd/kernels.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace modsym::simd;

TEST_CASE("scalar and AVX2 kernels agree") {
  const Kernels* v = avx2_kernels();
  if (!v) {
    MESSAGE("AVX2 kernels unavailable; only the scalar table is exercised");
    return;
  }
  const Kernels& s = scalar_kernels();
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 133u}) {
    std::vector<std::uint64_t> a(n), b(n);
    for (auto& x : a) x = rng();
    for (auto& x : b) x = rng();
    CHECK(s.and_parity(a.data(), b.data(), n) == v->and_parity(a.data(), b.data(), n));
    auto a1 = a, a2 = a;
    s.xor_words(a1.data(), b.data(), n);
    v->xor_words(a2.data(), b.data(), n);
    CHECK(a1 == a2);
  }
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 31u, 61u}) {
    for (std::size_t n : {1u, 7u, 8u, 17u, 100u}) {
      std::vector<std::uint32_t> d(n), x(n);
      for (auto& e : d) e = static_cast<std::uint32_t>(rng() % p);
      for (auto& e : x) e = static_cast<std::uint32_t>(rng() % p);
      for (std::uint32_t c = 0; c < p; ++c) {
        auto d1 = d, d2 = d;
        s.axpy_mod(d1.data(), x.data(), c, n, p);
        v->axpy_mod(d2.data(), x.data(), c, n, p);
        CHECK(d1 == d2);
        s.scale_mod(d1.data(), c, n, p);
        v->scale_mod(d2.data(), c, n, p);
        CHECK(d1 == d2);
      }
    }
  }
}

TEST_CASE("scalar kernels match direct arithmetic") {
  const Kernels& s = scalar_kernels();
  std::vector<std::uint32_t> d{1, 2, 3, 4}, x{4, 4, 4, 4};
  s.axpy_mod(d.data(), x.data(), 3, 4, 5);
  CHECK(d == std::vector<std::uint32_t>{3, 4, 0, 1});
  std::uint64_t a[] = {0b1011}, b[] = {0b0011};
  CHECK(s.and_parity(a, b, 1) == false);
}

TEST_CASE("set_active switches tables") {
  set_active(Isa::scalar);
  CHECK(active().isa == Isa::scalar);
  if (avx2_kernels()) {
    set_active(Isa::avx2);
    CHECK(active().isa == Isa::avx2);
  } else {
    CHECK_THROWS_AS(set_active(Isa::avx2), std::invalid_argument);
  }
}
