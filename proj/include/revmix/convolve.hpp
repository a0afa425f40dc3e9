// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_CONVOLVE_HPP_
#define REVMIX_CONVOLVE_HPP_

#include <span>
#include <vector>

namespace revmix {

enum class ConvolvePolicy { automatic, direct, fft };

// Full linear convolution; output length = len(signal) + len(kernel) - 1.
// The automatic policy picks the direct sum for short kernels and an
// FFT overlap-add scheme otherwise; the two paths agree to ~1e-12 relative.
std::vector<double> convolve(std::span<const double> signal, std::span<const double> kernel,
                             ConvolvePolicy policy = ConvolvePolicy::automatic);

}  // namespace revmix

#endif  // REVMIX_CONVOLVE_HPP_
