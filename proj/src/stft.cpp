// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "revmix/stft.hpp"

#include <cmath>
#include <numbers>

#include "revmix/errors.hpp"
#include "revmix/fft.hpp"

namespace revmix {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> make_window(WindowKind kind, std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Periodic Hann, the variant that satisfies overlap-add exactly.
    const double hann = 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) /
                                             static_cast<double>(n));
    w[i] = kind == WindowKind::sqrt_hann ? std::sqrt(hann) : hann;
  }
  return w;
}

// Steady-state overlap-add of analysis*synthesis window products. Must be a
// positive constant for the inverse transform to be exact.
void check_cola(const std::vector<double>& wa, const std::vector<double>& ws, std::size_t hop) {
  const std::size_t n = wa.size();
  std::vector<double> acc(4 * n, 0.0);
  for (std::size_t start = 0; start + n <= acc.size(); start += hop) {
    for (std::size_t i = 0; i < n; ++i) acc[start + i] += wa[i] * ws[i];
  }
  double lo = acc[n], hi = acc[n];
  for (std::size_t p = n; p < 2 * n; ++p) {
    lo = std::min(lo, acc[p]);
    hi = std::max(hi, acc[p]);
  }
  if (lo <= 0.0 || (hi - lo) > 1e-8 * hi) {
    throw InvalidArgument("stft: window/hop pair violates constant overlap-add");
  }
}

}  // namespace

std::size_t StftConfig::frame_length(int sample_rate) const {
  const auto n = static_cast<long>(std::lround(window_ms * sample_rate / 1000.0));
  if (n < 1) throw InvalidArgument("stft: frame length below one sample");
  return static_cast<std::size_t>(n);
}

std::size_t StftConfig::hop_length(int sample_rate) const {
  const auto n = static_cast<long>(std::lround(hop_ms * sample_rate / 1000.0));
  if (n < 1) throw InvalidArgument("stft: hop length below one sample");
  if (hop_ms > window_ms) throw InvalidArgument("stft: hop exceeds window");
  return static_cast<std::size_t>(n);
}

Spectrogram stft(const AudioBuffer& buffer, const StftConfig& config) {
  const std::size_t frame = config.frame_length(buffer.sample_rate());
  const std::size_t hop = config.hop_length(buffer.sample_rate());
  const auto window = make_window(config.window, frame);
  check_cola(window, window, hop);

  const std::size_t n = buffer.frames();
  // Pad a full frame on the left so every real sample gets full window
  // coverage, then right-pad so the last frame starts beyond the signal.
  const std::size_t padded = frame + std::max<std::size_t>(n, 1) + frame;
  const std::size_t frames_t = (padded - frame) / hop + 1;
  const std::size_t bins = frame / 2 + 1;

  Spectrogram spec(buffer.channels(), frames_t, bins, config, n, buffer.sample_rate());
  std::vector<double> windowed(frame);
  for (std::size_t c = 0; c < buffer.channels(); ++c) {
    auto x = buffer.channel(c);
    for (std::size_t t = 0; t < frames_t; ++t) {
      const std::size_t start = t * hop;  // position in the padded signal
      for (std::size_t i = 0; i < frame; ++i) {
        const std::size_t p = start + i;
        const double sample =
            (p >= frame && p - frame < n) ? x[p - frame] : 0.0;
        windowed[i] = sample * window[i];
      }
      auto bins_t = fft::rfft(windowed, frame);
      for (std::size_t k = 0; k < bins; ++k) spec.at(c, t, k) = bins_t[k];
    }
  }
  return spec;
}

AudioBuffer istft(const Spectrogram& spec) {
  const std::size_t frame = spec.config().frame_length(spec.sample_rate());
  const std::size_t hop = spec.config().hop_length(spec.sample_rate());
  const auto window = make_window(spec.config().window, frame);
  check_cola(window, window, hop);

  const std::size_t n = spec.original_length();
  const std::size_t padded = (spec.frames() - 1) * hop + frame;
  AudioBuffer out(spec.channels(), std::max<std::size_t>(n, 1), spec.sample_rate());

  std::vector<double> acc(padded, 0.0), norm(padded, 0.0);
  std::vector<std::complex<double>> frame_spec(frame / 2 + 1);
  for (std::size_t c = 0; c < spec.channels(); ++c) {
    std::fill(acc.begin(), acc.end(), 0.0);
    std::fill(norm.begin(), norm.end(), 0.0);
    for (std::size_t t = 0; t < spec.frames(); ++t) {
      for (std::size_t k = 0; k < frame_spec.size(); ++k) frame_spec[k] = spec.at(c, t, k);
      auto samples = fft::irfft(frame_spec, frame);
      const std::size_t start = t * hop;
      for (std::size_t i = 0; i < frame; ++i) {
        acc[start + i] += samples[i] * window[i];
        norm[start + i] += window[i] * window[i];
      }
    }
    auto y = out.channel(c);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t p = frame + i;
      y[i] = norm[p] > 0.0 ? acc[p] / norm[p] : 0.0;
    }
  }
  return out.resized(n);
}

}  // namespace revmix
