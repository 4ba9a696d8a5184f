#include "nsset/kernels.hpp"

namespace nsset::kernels {

#if defined(NSSET_HAVE_AVX2)
const Ops& avx2_ops_table();  // defined in avx2.cpp
#endif

const Ops* avx2_ops() {
#if defined(NSSET_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const Ops* table =
      __builtin_cpu_supports("avx2") ? &avx2_ops_table() : nullptr;
  return table;
#else
  return nullptr;
#endif
}

const Ops& active_ops() {
  static const Ops& chosen = []() -> const Ops& {
    if (const Ops* simd = avx2_ops()) return *simd;
    return scalar_ops();
  }();
  return chosen;
}

std::vector<const Ops*> available_ops() {
  std::vector<const Ops*> tables{&scalar_ops()};
  if (const Ops* simd = avx2_ops()) tables.push_back(simd);
  return tables;
}

}  // namespace nsset::kernels
