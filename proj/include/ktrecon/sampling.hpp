#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktrecon/volume.hpp"

namespace ktrecon {

// A T x Ky boolean grid over phase-encode lines per frame. Sampling line ky
// in frame t acquires the whole readout (all h at that (t, ky)).
struct SamplingMask {
  std::size_t frames = 0;  // T
  std::size_t lines = 0;   // Ky
  unsigned acceleration = 1;
  std::string kind = "custom";
  std::uint64_t seed = 0;
  std::vector<std::uint8_t> grid;  // row-major t * Ky + ky

  SamplingMask() = default;
  SamplingMask(std::size_t t, std::size_t ky)
      : frames(t), lines(ky), grid(t * ky, 0) {}

  bool sampled(std::size_t t, std::size_t ky) const { return grid[t * lines + ky] != 0; }
  void set(std::size_t t, std::size_t ky, bool v) { grid[t * lines + ky] = v ? 1 : 0; }
  std::size_t frame_count(std::size_t t) const;
};

// Sheared lattice: frame t samples {ky : ky mod R == (offset + t*shear) mod R}.
SamplingMask lattice_mask(std::size_t frames, std::size_t lines, unsigned accel,
                          long shear = 1, long offset = 0);

// Variable-density random pattern: each frame samples exactly round(Ky/R)
// lines without replacement, with probability proportional to
// density * gaussian(sigma = envelope_frac * Ky, centered at floor(Ky/2))
// + (1 - density) * uniform. The center line is always included.
SamplingMask vd_random_mask(std::size_t frames, std::size_t lines, unsigned accel,
                            double density, double envelope_frac, std::uint64_t seed);

// Encoding operator E: keeps sampled entries, zeroes the rest.
ComplexVolume apply_mask(const ComplexVolume& full_kspace, const SamplingMask& m);

// Hard data consistency: measured at sampled entries (bit-level copy),
// prediction elsewhere. `weight` < 1 blends measured and prediction at the
// sampled entries (weight * measured + (1 - weight) * pred).
ComplexVolume apply_data_consistency(const ComplexVolume& pred_kspace,
                                     const ComplexVolume& measured,
                                     const SamplingMask& m, double weight = 1.0);

// Mask file: text header {T, Ky, R, kind, seed} + one byte per cell.
void save_mask(const SamplingMask& m, const std::string& path);
SamplingMask load_mask(const std::string& path);

}  // namespace ktrecon
