#include "nsset/kernels.hpp"

// Reference kernels. Branch and operation order here define the semantics
// the SIMD backends must reproduce bit-for-bit, so selections are written as
// the (a > b) ? a : b forms the vector max/min instructions implement, and
// compound expressions fix the association order explicitly. Compiled with
// -ffp-contract=off.

namespace nsset::kernels {
namespace {

void vmax_scalar(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = (a[k] > b[k]) ? a[k] : b[k];
}

void vmin_scalar(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = (a[k] < b[k]) ? a[k] : b[k];
}

void vsub_clamp0_scalar(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const double d = a[k] - b[k];
    dst[k] = (d > 0.0) ? d : 0.0;
  }
}

void vone_minus_scalar(const double* a, double* dst, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = 1.0 - a[k];
}

void vaxpy_scalar(double alpha, const double* x, double* acc, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) acc[k] = acc[k] + alpha * x[k];
}

void vdivs_scalar(const double* a, double divisor, double* dst, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = a[k] / divisor;
}

void row_sums_scalar(const double* m, std::size_t rows, std::size_t cols, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    double acc = 0.0;
    const double* row = m + r * cols;
    for (std::size_t c = 0; c < cols; ++c) acc += row[c];
    out[r] = acc;
  }
}

void row_divide_scalar(const double* m, std::size_t rows, std::size_t cols,
                       const double* d, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = m + r * cols;
    double* dst = out + r * cols;
    for (std::size_t c = 0; c < cols; ++c) dst[c] = row[c] / d[r];
  }
}

void col_means_scalar(const double* m, std::size_t rows, std::size_t cols, double* out) {
  for (std::size_t c = 0; c < cols; ++c) out[c] = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = m + r * cols;
    for (std::size_t c = 0; c < cols; ++c) out[c] += row[c];
  }
  const double divisor = static_cast<double>(rows);
  for (std::size_t c = 0; c < cols; ++c) out[c] = out[c] / divisor;
}

void pairwise_compare_scalar(const double* t, const double* i, const double* f,
                             std::size_t m, double* out) {
  for (std::size_t r = 0; r < m; ++r) {
    const double tr = t[r], ir = i[r], fr = f[r];
    double* row = out + r * m;
    for (std::size_t c = 0; c < m; ++c) {
      const double dt = tr - t[c];
      const double di = i[c] - ir;
      const double df = f[c] - fr;
      row[c] = (((dt + di) + df) + 1.0) * 0.5;
    }
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{
      "scalar",
      vmax_scalar,
      vmin_scalar,
      vsub_clamp0_scalar,
      vone_minus_scalar,
      vaxpy_scalar,
      vdivs_scalar,
      row_sums_scalar,
      row_divide_scalar,
      col_means_scalar,
      pairwise_compare_scalar,
  };
  return table;
}

}  // namespace nsset::kernels
