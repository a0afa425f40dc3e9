// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_AUDIO_BUFFER_HPP_
#define REVMIX_AUDIO_BUFFER_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "revmix/errors.hpp"

namespace revmix {

// Uniformly sampled multi-channel waveform. Samples are 64-bit floats in
// nominal range [-1, 1], stored channel-major (each channel contiguous).
class AudioBuffer {
 public:
  AudioBuffer() = default;

  AudioBuffer(std::size_t channels, std::size_t frames, int sample_rate)
      : data_(channels * frames, 0.0),
        channels_(channels),
        frames_(frames),
        sample_rate_(sample_rate) {
    if (channels == 0 || sample_rate <= 0) {
      throw InvalidArgument("AudioBuffer: channels and sample rate must be positive");
    }
  }

  static AudioBuffer from_mono(std::vector<double> samples, int sample_rate) {
    AudioBuffer b;
    b.frames_ = samples.size();
    b.channels_ = 1;
    b.sample_rate_ = sample_rate;
    b.data_ = std::move(samples);
    if (sample_rate <= 0) throw InvalidArgument("AudioBuffer: sample rate must be positive");
    return b;
  }

  std::size_t channels() const { return channels_; }
  std::size_t frames() const { return frames_; }
  int sample_rate() const { return sample_rate_; }
  bool empty() const { return frames_ == 0; }

  std::span<double> channel(std::size_t c) {
    return {data_.data() + c * frames_, frames_};
  }
  std::span<const double> channel(std::size_t c) const {
    return {data_.data() + c * frames_, frames_};
  }

  double& at(std::size_t c, std::size_t n) { return data_[c * frames_ + n]; }
  double at(std::size_t c, std::size_t n) const { return data_[c * frames_ + n]; }

  // Mono view helpers. left() is the canonical single-channel projection.
  AudioBuffer left() const { return mono_of(0); }
  AudioBuffer mono_of(std::size_t c) const {
    std::vector<double> s(channel(c).begin(), channel(c).end());
    return from_mono(std::move(s), sample_rate_);
  }

  // Truncates or zero-pads every channel to `frames`.
  AudioBuffer resized(std::size_t frames) const {
    AudioBuffer out(channels_, frames, sample_rate_);
    const std::size_t n = frames < frames_ ? frames : frames_;
    for (std::size_t c = 0; c < channels_; ++c) {
      auto src = channel(c);
      auto dst = out.channel(c);
      for (std::size_t i = 0; i < n; ++i) dst[i] = src[i];
    }
    return out;
  }

 private:
  std::vector<double> data_;
  std::size_t channels_ = 0;
  std::size_t frames_ = 0;
  int sample_rate_ = 0;
};

}  // namespace revmix

#endif  // REVMIX_AUDIO_BUFFER_HPP_
