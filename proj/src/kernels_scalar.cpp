#include <cmath>
#include <cstddef>

#include "ktrecon/kernels.hpp"

namespace ktrecon::kern {

namespace {

void gemm_nn_acc_scalar(double* c, const double* a, const double* b,
                        std::size_t m, std::size_t n, std::size_t k) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      const double* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += aip * brow[j];
      }
    }
  }
}

void add_scalar(double* out, const double* x, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + y[i];
}

void sub_scalar(double* out, const double* x, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - y[i];
}

void mul_scalar(double* out, const double* x, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void axpy_scalar(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double sum_abs_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::abs(x[i]);
  return s;
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::abs(x[i]);
    if (v > m) m = v;
  }
  return m;
}

void cmul_scalar(double* out, const double* x, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    out[2 * i] = xr * yr - xi * yi;
    out[2 * i + 1] = xr * yi + xi * yr;
  }
}

double max_abs2_c_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[2 * i] * x[2 * i] + x[2 * i + 1] * x[2 * i + 1];
    if (v > m) m = v;
  }
  return m;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {
      gemm_nn_acc_scalar, add_scalar,     sub_scalar,     mul_scalar,
      axpy_scalar,        scale_scalar,   dot_scalar,     sum_scalar,
      sum_abs_scalar,     max_abs_scalar, cmul_scalar,    max_abs2_c_scalar,
  };
  return k;
}

}  // namespace ktrecon::kern
