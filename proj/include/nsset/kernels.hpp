#pragma once

#include <cstddef>
#include <vector>

namespace nsset::kernels {

// Arithmetic inner loops of the library. Every backend implements the same
// table; the scalar kernels are the reference semantics and the SIMD
// variants are required to produce bit-identical results (all kernels are
// compiled with -ffp-contract=off and use the same per-entry operation
// order). The equivalence suite asserts this bitwise.
//
// Matrix arguments are dense row-major.
struct Ops {
  const char* name;

  // Elementwise over n entries.
  void (*vmax)(const double* a, const double* b, double* dst, std::size_t n);
  void (*vmin)(const double* a, const double* b, double* dst, std::size_t n);
  // dst = max(a-b, 0); covers the difference clauses.
  void (*vsub_clamp0)(const double* a, const double* b, double* dst, std::size_t n);
  // dst = 1 - a; the indeterminacy reflection of the complement.
  void (*vone_minus)(const double* a, double* dst, std::size_t n);
  // acc += alpha * x
  void (*vaxpy)(double alpha, const double* x, double* acc, std::size_t n);
  // dst = a / divisor
  void (*vdivs)(const double* a, double divisor, double* dst, std::size_t n);

  // out[r] = sum_c m[r][c], accumulated left to right.
  void (*row_sums)(const double* m, std::size_t rows, std::size_t cols, double* out);
  // out[r][c] = m[r][c] / d[r]
  void (*row_divide)(const double* m, std::size_t rows, std::size_t cols,
                     const double* d, double* out);
  // out[c] = (sum_r m[r][c]) / rows, accumulated in row order.
  void (*col_means)(const double* m, std::size_t rows, std::size_t cols, double* out);
  // Pairwise dominance scores of m elements with degrees (t, i, f):
  //   out[r][c] = (((t[r]-t[c]) + (i[c]-i[r])) + (f[c]-f[r]) + 1) / 2
  void (*pairwise_compare)(const double* t, const double* i, const double* f,
                           std::size_t m, double* out);
};

/// Reference implementation; always available.
const Ops& scalar_ops();

/// AVX2 implementation, or nullptr when the build or the running CPU lacks
/// AVX2 support.
const Ops* avx2_ops();

/// Backend selected once at startup: the widest available SIMD variant,
/// falling back to scalar.
const Ops& active_ops();

/// All backends usable on this machine (scalar first). For equivalence tests.
std::vector<const Ops*> available_ops();

}  // namespace nsset::kernels
