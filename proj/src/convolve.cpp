// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "revmix/convolve.hpp"

#include <algorithm>
#include <complex>

#include "revmix/errors.hpp"
#include "revmix/fft.hpp"

namespace revmix {
namespace {

constexpr std::size_t kDirectKernelLimit = 96;
// Signals longer than this are convolved block-wise (overlap-add) to bound
// the FFT working set on long max-condition utterances.
constexpr std::size_t kBlockFrames = 1u << 20;

std::vector<double> convolve_direct(std::span<const double> x, std::span<const double> h) {
  std::vector<double> y(x.size() + h.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (std::size_t j = 0; j < h.size(); ++j) y[i + j] += xi * h[j];
  }
  return y;
}

void fft_block(std::span<const double> x, std::span<const double> h,
               std::span<const std::complex<double>> h_spec, std::size_t nfft,
               std::vector<double>& out, std::size_t offset) {
  auto x_spec = fft::rfft(x, nfft);
  for (std::size_t k = 0; k < x_spec.size(); ++k) x_spec[k] *= h_spec[k];
  auto block = fft::irfft(x_spec, nfft);
  const std::size_t n = std::min(block.size(), x.size() + h.size() - 1);
  for (std::size_t i = 0; i < n; ++i) out[offset + i] += block[i];
}

std::vector<double> convolve_fft(std::span<const double> x, std::span<const double> h) {
  std::vector<double> y(x.size() + h.size() - 1, 0.0);
  const std::size_t block = std::max<std::size_t>(kBlockFrames, h.size());
  if (x.size() <= block) {
    const std::size_t nfft = fft::next_pow2(x.size() + h.size() - 1);
    const auto h_spec = fft::rfft(h, nfft);
    fft_block(x, h, h_spec, nfft, y, 0);
    return y;
  }
  const std::size_t nfft = fft::next_pow2(block + h.size() - 1);
  const auto h_spec = fft::rfft(h, nfft);
  for (std::size_t start = 0; start < x.size(); start += block) {
    const std::size_t len = std::min(block, x.size() - start);
    fft_block(x.subspan(start, len), h, h_spec, nfft, y, start);
  }
  return y;
}

}  // namespace

std::vector<double> convolve(std::span<const double> signal, std::span<const double> kernel,
                             ConvolvePolicy policy) {
  if (signal.empty() || kernel.empty()) {
    throw InvalidArgument("convolve: empty signal or kernel");
  }
  switch (policy) {
    case ConvolvePolicy::direct:
      return convolve_direct(signal, kernel);
    case ConvolvePolicy::fft:
      return convolve_fft(signal, kernel);
    case ConvolvePolicy::automatic:
    default:
      if (kernel.size() <= kDirectKernelLimit || signal.size() <= kDirectKernelLimit) {
        return convolve_direct(signal, kernel);
      }
      return convolve_fft(signal, kernel);
  }
}

}  // namespace revmix
