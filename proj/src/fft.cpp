#include "ktrecon/fft.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace ktrecon::fft {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

struct Pow2Plan {
  std::size_t n = 0;
  std::vector<std::size_t> bitrev;
  // twiddles for the forward transform, all stages concatenated
  std::vector<std::complex<double>> twiddle;

  explicit Pow2Plan(std::size_t size) : n(size) {
    bitrev.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b) {
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
      }
      bitrev[i] = r;
    }
    twiddle.reserve(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const double ang = -2.0 * kPi * static_cast<double>(j) / static_cast<double>(len);
        twiddle.emplace_back(std::cos(ang), std::sin(ang));
      }
    }
  }

  void run(std::complex<double>* a, bool inverse) const {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = bitrev[i];
      if (i < j) std::swap(a[i], a[j]);
    }
    const std::complex<double>* tw = twiddle.data();
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t half = len / 2;
      for (std::size_t base = 0; base < n; base += len) {
        for (std::size_t j = 0; j < half; ++j) {
          const std::complex<double> w = inverse ? std::conj(tw[j]) : tw[j];
          const std::complex<double> u = a[base + j];
          const std::complex<double> v = a[base + j + half] * w;
          a[base + j] = u + v;
          a[base + j + half] = u - v;
        }
      }
      tw += half;
    }
  }
};

struct BluesteinPlan {
  std::size_t n = 0;
  std::size_t m = 0;  // padded power-of-two length, >= 2n-1
  std::vector<std::complex<double>> chirp;       // e^{-i pi k^2 / n}
  std::vector<std::complex<double>> b_spectrum;  // FFT_m of the chirp filter
  std::shared_ptr<const Pow2Plan> pow2;

  BluesteinPlan(std::size_t size, std::shared_ptr<const Pow2Plan> p2)
      : n(size), m(p2->n), pow2(std::move(p2)) {
    chirp.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      // k^2 mod 2n keeps the phase argument small and accurate
      const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % (2 * n);
      const double ang = -kPi * static_cast<double>(k2) / static_cast<double>(n);
      chirp[k] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<std::complex<double>> b(m, std::complex<double>(0.0, 0.0));
    b[0] = {1.0, 0.0};
    for (std::size_t k = 1; k < n; ++k) {
      const std::complex<double> v = std::conj(chirp[k]);
      b[k] = v;
      b[m - k] = v;
    }
    pow2->run(b.data(), false);
    b_spectrum = std::move(b);
  }

  void run(std::complex<double>* a, bool inverse) const {
    std::vector<std::complex<double>> work(m, std::complex<double>(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
      const std::complex<double> c = inverse ? std::conj(chirp[k]) : chirp[k];
      work[k] = a[k] * c;
    }
    pow2->run(work.data(), false);
    if (inverse) {
      for (std::size_t k = 0; k < m; ++k) work[k] *= std::conj(b_spectrum[k]);
    } else {
      for (std::size_t k = 0; k < m; ++k) work[k] *= b_spectrum[k];
    }
    pow2->run(work.data(), true);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) {
      const std::complex<double> c = inverse ? std::conj(chirp[k]) : chirp[k];
      a[k] = work[k] * c * inv_m;
    }
  }
};

std::shared_ptr<const Pow2Plan> pow2_plan(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const Pow2Plan>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<Pow2Plan>(n);
  return slot;
}

std::shared_ptr<const BluesteinPlan> bluestein_plan(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const BluesteinPlan>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<BluesteinPlan>(n, pow2_plan(next_pow2(2 * n - 1)));
  return slot;
}

}  // namespace

void transform(std::complex<double>* data, std::size_t n, bool inverse) {
  if (n <= 1) return;
  if (is_pow2(n)) {
    pow2_plan(n)->run(data, inverse);
  } else {
    bluestein_plan(n)->run(data, inverse);
  }
}

void centered_line(std::complex<double>* base, std::size_t n, std::size_t stride,
                   bool inverse) {
  if (n == 1) return;
  thread_local std::vector<std::complex<double>> tmp;
  tmp.resize(n);
  const std::size_t half_lo = n / 2;        // ifftshift offset
  const std::size_t half_hi = (n + 1) / 2;  // fftshift offset
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t src = k + half_lo;
    if (src >= n) src -= n;
    tmp[k] = base[src * stride];
  }
  transform(tmp.data(), n, inverse);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t src = k + half_hi;
    if (src >= n) src -= n;
    base[k * stride] = tmp[src] * scale;
  }
}

}  // namespace ktrecon::fft
