#include "wsat/kernels.hpp"

namespace wsat::kernels {

namespace {

bool detect_avx2() {
#if defined(WSAT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

struct Dispatch {
  bool has_avx2 = detect_avx2();
  Isa isa = has_avx2 ? Isa::avx2 : Isa::scalar;
};

Dispatch& state() {
  static Dispatch d;
  return d;
}

}  // namespace

bool avx2_available() { return state().has_avx2; }

Isa active_isa() { return state().isa; }

void select_isa(Isa isa) {
  state().isa = (isa == Isa::avx2 && avx2_available()) ? Isa::avx2 : Isa::scalar;
}

const KernelTable& active() {
#if defined(WSAT_HAVE_AVX2)
  if (state().isa == Isa::avx2) return avx2::table();
#endif
  return scalar::table();
}

}  // namespace wsat::kernels
