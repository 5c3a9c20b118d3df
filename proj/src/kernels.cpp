#include "ktrecon/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <thread>
#include <vector>

namespace ktrecon::kern {

bool avx2_compiled_in() {
#ifdef KTRECON_HAVE_AVX2
  return true;
#else
  return false;
#endif
}

bool avx2_available() {
#ifdef KTRECON_HAVE_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#ifndef KTRECON_HAVE_AVX2
const Kernels& avx2_kernels() { return scalar_kernels(); }
#endif

namespace {

Backend choose_backend() {
  if (const char* env = std::getenv("KTRECON_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Backend::Avx2;
    // "auto" or unrecognized falls through
  }
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<int> g_backend{-1};

Backend backend() {
  int b = g_backend.load(std::memory_order_relaxed);
  if (b < 0) {
    b = static_cast<int>(choose_backend());
    g_backend.store(b, std::memory_order_relaxed);
  }
  return static_cast<Backend>(b);
}

}  // namespace

Backend active_backend() { return backend(); }

void set_backend(Backend b) { g_backend.store(static_cast<int>(b)); }

const Kernels& active() {
  return backend() == Backend::Avx2 ? avx2_kernels() : scalar_kernels();
}

const char* backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

int thread_count() {
  static int n = [] {
    if (const char* env = std::getenv("KTRECON_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return std::min(v, 64);
    }
    return 1;
  }();
  return n;
}

namespace {

// Minimal persistent pool; jobs are contiguous index ranges. Worker i always
// receives the same range for a given (n, thread count), so output bytes do
// not depend on scheduling.
class Pool {
 public:
  explicit Pool(int workers) : ranges_(workers) {
    for (int i = 0; i < workers; ++i) {
      threads_.emplace_back([this, i] { run(i); });
    }
  }

  void dispatch(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    std::unique_lock lock(mu_);
    fn_ = &fn;
    const std::size_t workers = threads_.size();
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t i = 0; i < workers; ++i) {
      const std::size_t lo = std::min(n, i * chunk);
      ranges_[i] = {lo, std::min(n, lo + chunk)};
    }
    pending_ = static_cast<int>(workers);
    ++epoch_;
    cv_start_.notify_all();
    cv_done_.wait(lock, [this] { return pending_ == 0; });
    fn_ = nullptr;
  }

 private:
  void run(int idx) {
    std::uint64_t seen = 0;
    while (true) {
      std::pair<std::size_t, std::size_t> range;
      const std::function<void(std::size_t, std::size_t)>* fn;
      {
        std::unique_lock lock(mu_);
        cv_start_.wait(lock, [&] { return epoch_ != seen; });
        seen = epoch_;
        range = ranges_[idx];
        fn = fn_;
      }
      if (range.second > range.first) (*fn)(range.first, range.second);
      {
        std::lock_guard lock(mu_);
        if (--pending_ == 0) cv_done_.notify_all();
      }
    }
  }

  std::mutex mu_;
  std::condition_variable cv_start_, cv_done_;
  const std::function<void(std::size_t, std::size_t)>* fn_ = nullptr;
  std::vector<std::pair<std::size_t, std::size_t>> ranges_;
  std::uint64_t epoch_ = 0;
  int pending_ = 0;
  std::vector<std::thread> threads_;
};

}  // namespace

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  const int workers = thread_count();
  if (workers <= 1 || n < 2) {
    if (n > 0) fn(0, n);
    return;
  }
  static Pool* pool = new Pool(thread_count());
  pool->dispatch(n, fn);
}

namespace {

thread_local std::vector<double> g_scratch_a;
thread_local std::vector<double> g_scratch_b;

const double* maybe_transpose(const double* src, Op op, std::size_t rows_out,
                              std::size_t cols_out, std::vector<double>& scratch) {
  if (op == Op::N) return src;
  // src is cols_out x rows_out; produce rows_out x cols_out
  scratch.resize(rows_out * cols_out);
  for (std::size_t i = 0; i < cols_out; ++i) {
    for (std::size_t j = 0; j < rows_out; ++j) {
      scratch[j * cols_out + i] = src[i * rows_out + j];
    }
  }
  return scratch.data();
}

}  // namespace

void gemm(double* c, Op opa, const double* a, Op opb, const double* b,
          std::size_t m, std::size_t n, std::size_t k, bool accumulate) {
  const double* aa = maybe_transpose(a, opa, m, k, g_scratch_a);
  const double* bb = maybe_transpose(b, opb, k, n, g_scratch_b);
  if (!accumulate) std::memset(c, 0, m * n * sizeof(double));
  const Kernels& ks = active();
  if (thread_count() > 1 && m >= 8 && m * n * k >= (1u << 16)) {
    parallel_for(m, [&](std::size_t lo, std::size_t hi) {
      ks.gemm_nn_acc(c + lo * n, aa + lo * k, bb, hi - lo, n, k);
    });
  } else {
    ks.gemm_nn_acc(c, aa, bb, m, n, k);
  }
}

}  // namespace ktrecon::kern
