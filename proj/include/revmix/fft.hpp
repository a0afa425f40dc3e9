// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_FFT_HPP_
#define REVMIX_FFT_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace revmix::fft {

// In-place complex transform of arbitrary length (radix-2 for powers of two,
// Bluestein otherwise). Unnormalized forward; inverse carries the 1/n factor.
void transform(std::vector<std::complex<double>>& data, bool inverse);

// Real-input forward transform; returns n/2 + 1 non-redundant bins.
// The input is implicitly zero-padded or truncated to length n.
std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t n);

// Inverse of rfft: reconstructs n real samples from n/2 + 1 bins.
std::vector<double> irfft(std::span<const std::complex<double>> spectrum, std::size_t n);

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace revmix::fft

#endif  // REVMIX_FFT_HPP_
