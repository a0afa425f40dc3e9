// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_STFT_HPP_
#define REVMIX_STFT_HPP_

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "revmix/audio_buffer.hpp"

namespace revmix {

enum class WindowKind { sqrt_hann, hann };

struct StftConfig {
  double window_ms = 32.0;
  double hop_ms = 8.0;
  WindowKind window = WindowKind::sqrt_hann;

  std::size_t frame_length(int sample_rate) const;
  std::size_t hop_length(int sample_rate) const;
};

// Complex short-time spectra, [channels x frames x bins] with
// bins = frame_length / 2 + 1. Carries everything istft needs to
// reconstruct a signal of exactly original_length frames.
class Spectrogram {
 public:
  Spectrogram(std::size_t channels, std::size_t frames, std::size_t bins,
              StftConfig config, std::size_t original_length, int sample_rate)
      : data_(channels * frames * bins),
        channels_(channels),
        frames_(frames),
        bins_(bins),
        config_(config),
        original_length_(original_length),
        sample_rate_(sample_rate) {}

  std::size_t channels() const { return channels_; }
  std::size_t frames() const { return frames_; }
  std::size_t bins() const { return bins_; }
  const StftConfig& config() const { return config_; }
  std::size_t original_length() const { return original_length_; }
  int sample_rate() const { return sample_rate_; }

  std::complex<double>& at(std::size_t c, std::size_t t, std::size_t k) {
    return data_[(c * frames_ + t) * bins_ + k];
  }
  const std::complex<double>& at(std::size_t c, std::size_t t, std::size_t k) const {
    return data_[(c * frames_ + t) * bins_ + k];
  }

 private:
  std::vector<std::complex<double>> data_;
  std::size_t channels_, frames_, bins_;
  StftConfig config_;
  std::size_t original_length_;
  int sample_rate_;
};

// Forward transform. Inputs shorter than one frame are zero-padded to one
// frame, but original_length records the true length for reconstruction.
// Throws InvalidArgument if the window/hop pair violates constant
// overlap-add on the synthesis side.
Spectrogram stft(const AudioBuffer& buffer, const StftConfig& config);

// Inverse transform; exact original length, round-trip error ~1e-12.
AudioBuffer istft(const Spectrogram& spec);

}  // namespace revmix

#endif  // REVMIX_STFT_HPP_
