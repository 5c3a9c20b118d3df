#pragma once

#include <complex>
#include <cstddef>

namespace ktrecon::fft {

// Unnormalized DFT of a contiguous line: X_k = sum_n x_n e^{-+ 2*pi*i*k*n/N}.
// Power-of-two lengths use iterative radix-2; everything else goes through
// Bluestein's chirp-z on a padded power-of-two grid. Plans (twiddles, chirp
// spectra) are cached per length and safe for concurrent use.
void transform(std::complex<double>* data, std::size_t n, bool inverse);

// Centered orthonormal DFT along a strided line: shift so the center sample
// (index floor(N/2)) is the origin, transform, shift back, scale by 1/sqrt(N).
// The inverse uses the same sandwich and is the exact adjoint.
void centered_line(std::complex<double>* base, std::size_t n, std::size_t stride,
                   bool inverse);

}  // namespace ktrecon::fft
