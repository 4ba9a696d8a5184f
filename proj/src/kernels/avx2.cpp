// AVX2 kernel variants. Four doubles per lane; remainders fall back to the
// scalar expressions. No FMA anywhere (and -ffp-contract=off) so results are
// bit-identical to the scalar reference.

#if defined(__AVX2__)

#include <immintrin.h>

#include "nsset/kernels.hpp"

namespace nsset::kernels {
namespace {

void vmax_avx2(const double* a, const double* b, double* dst, std::size_t n) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(dst + k, _mm256_max_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
  }
  for (; k < n; ++k) dst[k] = (a[k] > b[k]) ? a[k] : b[k];
}

void vmin_avx2(const double* a, const double* b, double* dst, std::size_t n) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(dst + k, _mm256_min_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
  }
  for (; k < n; ++k) dst[k] = (a[k] < b[k]) ? a[k] : b[k];
}

void vsub_clamp0_avx2(const double* a, const double* b, double* dst, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
    // max_pd(d, 0) keeps d only when d > 0, matching the scalar branch.
    _mm256_storeu_pd(dst + k, _mm256_max_pd(d, zero));
  }
  for (; k < n; ++k) {
    const double d = a[k] - b[k];
    dst[k] = (d > 0.0) ? d : 0.0;
  }
}

void vone_minus_avx2(const double* a, double* dst, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(dst + k, _mm256_sub_pd(one, _mm256_loadu_pd(a + k)));
  }
  for (; k < n; ++k) dst[k] = 1.0 - a[k];
}

void vaxpy_avx2(double alpha, const double* x, double* acc, std::size_t n) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d sum = _mm256_add_pd(_mm256_loadu_pd(acc + k),
                                      _mm256_mul_pd(av, _mm256_loadu_pd(x + k)));
    _mm256_storeu_pd(acc + k, sum);
  }
  for (; k < n; ++k) acc[k] = acc[k] + alpha * x[k];
}

void vdivs_avx2(const double* a, double divisor, double* dst, std::size_t n) {
  const __m256d dv = _mm256_set1_pd(divisor);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(dst + k, _mm256_div_pd(_mm256_loadu_pd(a + k), dv));
  }
  for (; k < n; ++k) dst[k] = a[k] / divisor;
}

// Four rows per iteration, one lane per row, so each row keeps the scalar
// left-to-right accumulation order.
void row_sums_avx2(const double* m, std::size_t rows, std::size_t cols, double* out) {
  std::size_t r = 0;
  for (; r + 4 <= rows; r += 4) {
    const double* r0 = m + (r + 0) * cols;
    const double* r1 = m + (r + 1) * cols;
    const double* r2 = m + (r + 2) * cols;
    const double* r3 = m + (r + 3) * cols;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t c = 0; c < cols; ++c) {
      acc = _mm256_add_pd(acc, _mm256_set_pd(r3[c], r2[c], r1[c], r0[c]));
    }
    _mm256_storeu_pd(out + r, acc);
  }
  for (; r < rows; ++r) {
    double acc = 0.0;
    const double* row = m + r * cols;
    for (std::size_t c = 0; c < cols; ++c) acc += row[c];
    out[r] = acc;
  }
}

void row_divide_avx2(const double* m, std::size_t rows, std::size_t cols,
                     const double* d, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = m + r * cols;
    double* dst = out + r * cols;
    const __m256d dv = _mm256_set1_pd(d[r]);
    std::size_t c = 0;
    for (; c + 4 <= cols; c += 4) {
      _mm256_storeu_pd(dst + c, _mm256_div_pd(_mm256_loadu_pd(row + c), dv));
    }
    for (; c < cols; ++c) dst[c] = row[c] / d[r];
  }
}

// Vectorized across columns; each column accumulates in row order like the
// scalar reference.
void col_means_avx2(const double* m, std::size_t rows, std::size_t cols, double* out) {
  const double divisor = static_cast<double>(rows);
  std::size_t c = 0;
  for (; c + 4 <= cols; c += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t r = 0; r < rows; ++r) {
      acc = _mm256_add_pd(acc, _mm256_loadu_pd(m + r * cols + c));
    }
    _mm256_storeu_pd(out + c, _mm256_div_pd(acc, _mm256_set1_pd(divisor)));
  }
  for (; c < cols; ++c) {
    double acc = 0.0;
    for (std::size_t r = 0; r < rows; ++r) acc += m[r * cols + c];
    out[c] = acc / divisor;
  }
}

void pairwise_compare_avx2(const double* t, const double* i, const double* f,
                           std::size_t m, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  for (std::size_t r = 0; r < m; ++r) {
    const __m256d tr = _mm256_set1_pd(t[r]);
    const __m256d ir = _mm256_set1_pd(i[r]);
    const __m256d fr = _mm256_set1_pd(f[r]);
    double* row = out + r * m;
    std::size_t c = 0;
    for (; c + 4 <= m; c += 4) {
      const __m256d dt = _mm256_sub_pd(tr, _mm256_loadu_pd(t + c));
      const __m256d di = _mm256_sub_pd(_mm256_loadu_pd(i + c), ir);
      const __m256d df = _mm256_sub_pd(_mm256_loadu_pd(f + c), fr);
      const __m256d s = _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(dt, di), df), one);
      _mm256_storeu_pd(row + c, _mm256_mul_pd(s, half));
    }
    for (; c < m; ++c) {
      const double dt = t[r] - t[c];
      const double di = i[c] - i[r];
      const double df = f[c] - f[r];
      row[c] = (((dt + di) + df) + 1.0) * 0.5;
    }
  }
}

}  // namespace

const Ops& avx2_ops_table() {
  static const Ops table{
      "avx2",
      vmax_avx2,
      vmin_avx2,
      vsub_clamp0_avx2,
      vone_minus_avx2,
      vaxpy_avx2,
      vdivs_avx2,
      row_sums_avx2,
      row_divide_avx2,
      col_means_avx2,
      pairwise_compare_avx2,
  };
  return table;
}

}  // namespace nsset::kernels

#endif  // __AVX2__
