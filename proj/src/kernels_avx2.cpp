#include <cmath>
#include <cstddef>
#include <immintrin.h>

#include "ktrecon/kernels.hpp"

// AVX2/FMA variants of the hot loops. This translation unit is the only one
// built with -mavx2 -mfma; callers reach it through the dispatch table after
// a runtime CPU check.

namespace ktrecon::kern {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, swapped));
}

void gemm_nn_acc_avx2(double* c, const double* a, const double* b,
                      std::size_t m, std::size_t n, std::size_t k) {
  // Narrow C rows: keep the whole row in registers across the k loop.
  if (n <= 32) {
    for (std::size_t i = 0; i < m; ++i) {
      double* crow = c + i * n;
      __m256d acc[8];
      const std::size_t nv = n / 4;
      for (std::size_t v = 0; v < nv; ++v) acc[v] = _mm256_loadu_pd(crow + 4 * v);
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d av = _mm256_set1_pd(a[i * k + p]);
        const double* brow = b + p * n;
        for (std::size_t v = 0; v < nv; ++v) {
          acc[v] = _mm256_fmadd_pd(av, _mm256_loadu_pd(brow + 4 * v), acc[v]);
        }
        for (std::size_t j = 4 * nv; j < n; ++j) crow[j] += a[i * k + p] * brow[j];
      }
      for (std::size_t v = 0; v < nv; ++v) _mm256_storeu_pd(crow + 4 * v, acc[v]);
    }
    return;
  }

  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const __m256d av = _mm256_set1_pd(a[i * k + p]);
      const double aip = a[i * k + p];
      const double* brow = b + p * n;
      std::size_t j = 0;
      for (; j + 8 <= n; j += 8) {
        __m256d c0 = _mm256_loadu_pd(crow + j);
        __m256d c1 = _mm256_loadu_pd(crow + j + 4);
        c0 = _mm256_fmadd_pd(av, _mm256_loadu_pd(brow + j), c0);
        c1 = _mm256_fmadd_pd(av, _mm256_loadu_pd(brow + j + 4), c1);
        _mm256_storeu_pd(crow + j, c0);
        _mm256_storeu_pd(crow + j + 4, c1);
      }
      for (; j + 4 <= n; j += 4) {
        __m256d c0 = _mm256_loadu_pd(crow + j);
        c0 = _mm256_fmadd_pd(av, _mm256_loadu_pd(brow + j), c0);
        _mm256_storeu_pd(crow + j, c0);
      }
      for (; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void add_avx2(double* out, const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) out[i] = x[i] + y[i];
}

void sub_avx2(double* out, const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) out[i] = x[i] - y[i];
}

void mul_avx2(double* out, const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) out[i] = x[i] * y[i];
}

void axpy_avx2(double* y, double a, const double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv);
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double sum_abs_avx2(const double* x, std::size_t n) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(signmask, _mm256_loadu_pd(x + i)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::abs(x[i]);
  return s;
}

double max_abs_avx2(const double* x, std::size_t n) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(signmask, _mm256_loadu_pd(x + i)));
  }
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void cmul_avx2(double* out, const double* x, const double* y, std::size_t n) {
  // two interleaved complex values per 256-bit lane: [r0 i0 r1 i1]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    const __m256d xr = _mm256_movedup_pd(xv);                 // [r0 r0 r1 r1]
    const __m256d xi = _mm256_permute_pd(xv, 0xF);            // [i0 i0 i1 i1]
    const __m256d yswap = _mm256_permute_pd(yv, 0x5);         // [yi0 yr0 yi1 yr1]
    const __m256d t = _mm256_mul_pd(xi, yswap);
    const __m256d r = _mm256_fmaddsub_pd(xr, yv, t);          // [rr ri rr ri]
    _mm256_storeu_pd(out + 2 * i, r);
  }
  for (; i < n; ++i) {
    const double xr = x[2 * i], ximag = x[2 * i + 1];
    const double yr = y[2 * i], yimag = y[2 * i + 1];
    out[2 * i] = xr * yr - ximag * yimag;
    out[2 * i + 1] = xr * yimag + ximag * yr;
  }
}

double max_abs2_c_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(x + 2 * i);
    const __m256d sq = _mm256_mul_pd(v, v);
    const __m256d mag = _mm256_hadd_pd(sq, sq);               // [m0 m0 m1 m1]
    acc = _mm256_max_pd(acc, mag);
  }
  double m = hmax(acc);
  for (; i < n; ++i) {
    const double v = x[2 * i] * x[2 * i] + x[2 * i + 1] * x[2 * i + 1];
    if (v > m) m = v;
  }
  return m;
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k = {
      gemm_nn_acc_avx2, add_avx2,     sub_avx2,     mul_avx2,
      axpy_avx2,        scale_avx2,   dot_avx2,     sum_avx2,
      sum_abs_avx2,     max_abs_avx2, cmul_avx2,    max_abs2_c_avx2,
  };
  return k;
}

}  // namespace ktrecon::kern
