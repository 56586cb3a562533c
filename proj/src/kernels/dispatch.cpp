#include <cstdlib>
#include <cstring>

#include "vlr/kernels.hpp"

namespace vlr::kernels {

#if VLR_HAVE_AVX2_TU
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#if VLR_HAVE_AVX2_TU
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok ? avx2_ops_impl() : nullptr;
#else
  return nullptr;
#endif
}

const Ops& active() {
  static const Ops* chosen = [] {
    const char* force = std::getenv("VLR_KERNEL");
    if (force && std::strcmp(force, "scalar") == 0) return &scalar_ops();
    if (force && std::strcmp(force, "avx2") == 0 && avx2_ops()) return avx2_ops();
    return avx2_ops() ? avx2_ops() : &scalar_ops();
  }();
  return *chosen;
}

} // namespace vlr::kernels
