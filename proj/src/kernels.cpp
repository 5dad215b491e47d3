#include "ratdyn/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace ratdyn::kernels {

namespace {

Isa detect() {
#if defined(RATDYN_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<int> g_forced{-1};

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  if (isa == Isa::Scalar) return true;
  return detect() == Isa::Avx2;
}

Isa active_isa() {
  int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  static const Isa detected = detect();
  return detected;
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument(std::string("ISA not supported: ") + isa_name(isa));
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_forced.store(-1, std::memory_order_relaxed); }

void horner_eval(const HornerBatch& batch) {
  const std::size_t n = batch.z_re.size();
  std::size_t done = 0;
#if defined(RATDYN_HAVE_AVX2_TU)
  if (active_isa() == Isa::Avx2) {
    done = n & ~std::size_t{3};
    detail::horner_eval_avx2(batch, done);
  }
#endif
  detail::horner_eval_scalar(batch, done, n);
}

void attraction_time(const AttractionBatch& batch) {
  const std::size_t n = batch.z_re.size();
  std::size_t done = 0;
#if defined(RATDYN_HAVE_AVX2_TU)
  if (active_isa() == Isa::Avx2) {
    done = n & ~std::size_t{3};
    detail::attraction_time_avx2(batch, done);
  }
#endif
  detail::attraction_time_scalar(batch, done, n);
}

}  // namespace ratdyn::kernels
