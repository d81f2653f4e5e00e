#include "doems/kernels.hpp"

#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace doems::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar, &detail::affine_map_scalar,
                                 &detail::axpy_mod_scalar, &detail::mul_mod_scalar};
  return table;
}

const KernelTable* avx2_table() {
#if defined(DOEMS_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const KernelTable table{Isa::avx2, &detail::affine_map_avx2, &detail::axpy_mod_avx2,
                                 &detail::mul_mod_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* env = std::getenv("DOEMS_KERNELS");
    if (env != nullptr && std::string(env) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace doems::kernels
