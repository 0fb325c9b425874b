#include "kernels_impl.hpp"
#include "modsym/simd/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace modsym::simd {

namespace {

const Kernels kScalar{Isa::scalar, scalar::xor_words, scalar::and_parity, scalar::axpy_mod, scalar::scale_mod};

#if defined(MODSYM_HAVE_AVX2)
const Kernels kAvx2{Isa::avx2, avx2::xor_words, avx2::and_parity, avx2::axpy_mod, avx2::scale_mod};

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

const Kernels* detect() {
#if defined(MODSYM_HAVE_AVX2)
  if (cpu_has_avx2()) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const Kernels*>& current() {
  static std::atomic<const Kernels*> table{detect()};
  return table;
}

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels* avx2_kernels() {
#if defined(MODSYM_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active() { return *current().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
  if (isa == Isa::scalar) {
    current().store(&kScalar);
    return;
  }
  const Kernels* k = avx2_kernels();
  if (!k) throw std::invalid_argument("AVX2 kernels are not available on this build/CPU");
  current().store(k);
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace modsym::simd
