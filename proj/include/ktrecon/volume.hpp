#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace ktrecon {

using Complex = std::complex<double>;

enum class Domain { ImageTime, ImageTempFreq, KspaceTime };

const char* domain_name(Domain d);
Domain domain_from_name(const std::string& name);

// A T x H x W grid of complex samples in row-major (t, h, w) order.
// Arithmetic is 64-bit throughout; the file format stores 32-bit floats.
struct ComplexVolume {
  std::size_t frames = 0;  // T
  std::size_t height = 0;  // H, frequency encode
  std::size_t width = 0;   // W, phase encode (Ky in k-space)
  Domain domain = Domain::ImageTime;
  std::vector<Complex> data;

  ComplexVolume() = default;
  ComplexVolume(std::size_t t, std::size_t h, std::size_t w,
                Domain dom = Domain::ImageTime)
      : frames(t), height(h), width(w), domain(dom), data(t * h * w) {}

  std::size_t size() const { return frames * height * width; }
  std::size_t index(std::size_t t, std::size_t h, std::size_t w) const {
    return (t * height + h) * width + w;
  }
  Complex& at(std::size_t t, std::size_t h, std::size_t w) {
    return data[index(t, h, w)];
  }
  const Complex& at(std::size_t t, std::size_t h, std::size_t w) const {
    return data[index(t, h, w)];
  }

  bool same_shape(const ComplexVolume& other) const {
    return frames == other.frames && height == other.height && width == other.width;
  }

  double max_abs() const;
  double norm2() const;  // Frobenius norm over all complex entries
};

// Per-frame centered orthonormal 2D DFT over (h, w).
ComplexVolume spatial_fft2c(const ComplexVolume& v);
ComplexVolume spatial_ifft2c(const ComplexVolume& v);

// Centered orthonormal 1D DFT along t at every (h, w).
ComplexVolume temporal_fft1c(const ComplexVolume& v);
ComplexVolume temporal_ifft1c(const ComplexVolume& v);

// Scales so the max magnitude is 1; returns the scale that restores the
// original. Throws ZeroVolumeError on an all-zero input.
struct NormalizeResult {
  ComplexVolume volume;
  double scale = 1.0;
};
NormalizeResult normalize(const ComplexVolume& v);

// VolumeFile: structured-text header + raw little-endian interleaved
// (real, imaginary) float32 payload in row-major (t, h, w) order.
void save_volume(const ComplexVolume& v, const std::string& path, double scale = 1.0);
struct LoadedVolume {
  ComplexVolume volume;
  double scale = 1.0;
};
LoadedVolume load_volume(const std::string& path);

}  // namespace ktrecon
