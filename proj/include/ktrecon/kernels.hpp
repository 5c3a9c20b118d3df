#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace ktrecon::kern {

// Dispatch table of the data-parallel inner loops. Every entry has a scalar
// reference implementation; the AVX2 variants are selected at runtime when
// the CPU supports them. KTRECON_SIMD=scalar|avx2|auto overrides selection.
struct Kernels {
  // dense row-major GEMM: C[m x n] += A[m x k] * B[k x n]
  void (*gemm_nn_acc)(double* c, const double* a, const double* b,
                      std::size_t m, std::size_t n, std::size_t k);

  void (*add)(double* out, const double* x, const double* y, std::size_t n);
  void (*sub)(double* out, const double* x, const double* y, std::size_t n);
  void (*mul)(double* out, const double* x, const double* y, std::size_t n);
  void (*axpy)(double* y, double a, const double* x, std::size_t n);
  void (*scale)(double* x, double a, std::size_t n);

  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  double (*sum_abs)(const double* x, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);

  // interleaved complex (re, im) pairs; n counts complex elements
  void (*cmul)(double* out, const double* x, const double* y, std::size_t n);
  // max of re^2 + im^2 over n complex elements
  double (*max_abs2_c)(const double* x, std::size_t n);
};

enum class Backend { Scalar, Avx2 };

const Kernels& scalar_kernels();
bool avx2_compiled_in();
bool avx2_available();            // compiled in and supported by this CPU
const Kernels& avx2_kernels();    // valid only when avx2_available()

Backend active_backend();
void set_backend(Backend b);      // overrides the KTRECON_SIMD/auto choice
const Kernels& active();
const char* backend_name(Backend b);

// GEMM with optional operand transposes, built on gemm_nn_acc. Transposed
// operands are materialized into scratch storage first.
enum class Op { N, T };
void gemm(double* c, Op opa, const double* a, Op opb, const double* b,
          std::size_t m, std::size_t n, std::size_t k, bool accumulate);

// Static row partition over [0, n); each index is processed by exactly one
// worker with identical per-index arithmetic, so results do not depend on
// the thread count. Thread count comes from KTRECON_THREADS (default 1).
int thread_count();
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace ktrecon::kern
