// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "revmix/resample.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

namespace revmix {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTapsPerPhase = 64;
// Kaiser beta for ~80 dB stopband attenuation: 0.1102 * (A - 8.7).
constexpr double kKaiserBeta = 0.1102 * (80.0 - 8.7);

// Modified Bessel function of the first kind, order zero (series expansion).
double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double half_x2 = 0.25 * x * x;
  for (int k = 1; k < 64; ++k) {
    term *= half_x2 / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}

// Prototype lowpass at the upsampled rate: length taps_per_phase * L,
// cutoff 1 / (2 * max(L, M)), passband gain L.
std::vector<double> design_filter(std::int64_t up, std::int64_t down) {
  const std::int64_t n = kTapsPerPhase * up;
  const double cutoff = 0.5 / static_cast<double>(std::max(up, down));
  const double center = static_cast<double>(n - 1) / 2.0;
  const double i0_beta = bessel_i0(kKaiserBeta);
  std::vector<double> h(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) - center;
    const double u = t / (static_cast<double>(n) / 2.0);
    const double window = bessel_i0(kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - u * u))) / i0_beta;
    h[i] = static_cast<double>(up) * 2.0 * cutoff * sinc(2.0 * cutoff * t) * window;
  }
  return h;
}

}  // namespace

AudioBuffer resample(const AudioBuffer& buffer, int target_rate) {
  if (target_rate <= 0) throw InvalidArgument("resample: target rate must be positive");
  if (target_rate == buffer.sample_rate()) return buffer;

  const std::int64_t g = std::gcd<std::int64_t>(buffer.sample_rate(), target_rate);
  const std::int64_t up = target_rate / g;
  const std::int64_t down = buffer.sample_rate() / g;

  const std::vector<double> h = design_filter(up, down);
  const std::int64_t half = (static_cast<std::int64_t>(h.size()) - 1) / 2;
  const std::int64_t in_frames = static_cast<std::int64_t>(buffer.frames());
  const std::int64_t out_frames = static_cast<std::int64_t>(std::llround(
      static_cast<double>(in_frames) * static_cast<double>(target_rate) /
      static_cast<double>(buffer.sample_rate())));

  AudioBuffer out(buffer.channels(), static_cast<std::size_t>(out_frames), target_rate);
  if (out_frames == 0 || in_frames == 0) return out.resized(static_cast<std::size_t>(out_frames));

  for (std::size_t c = 0; c < buffer.channels(); ++c) {
    auto x = buffer.channel(c);
    auto y = out.channel(c);
    for (std::int64_t t = 0; t < out_frames; ++t) {
      // Position on the up-sampled grid, group delay removed.
      const std::int64_t u = t * down + half;
      const std::int64_t phase = u % up;
      const std::int64_t base = u / up;
      double acc = 0.0;
      for (std::int64_t j = 0; j < kTapsPerPhase; ++j) {
        const std::int64_t xi = base - j;
        if (xi < 0 || xi >= in_frames) continue;
        acc += h[static_cast<std::size_t>(phase + j * up)] * x[static_cast<std::size_t>(xi)];
      }
      y[static_cast<std::size_t>(t)] = acc;
    }
  }
  return out;
}

}  // namespace revmix
