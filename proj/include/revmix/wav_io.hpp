// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_WAV_IO_HPP_
#define REVMIX_WAV_IO_HPP_

#include <cstddef>
#include <string>

#include "revmix/audio_buffer.hpp"

namespace revmix {

enum class WavEncoding { pcm16, float32 };

struct WavWriteOptions {
  WavEncoding encoding = WavEncoding::float32;
  // Writing fails if more than this fraction of samples clip (pcm16 only).
  double max_clip_fraction = 1.0;
};

// Reads a RIFF/WAVE file. Supported: PCM16 and IEEE float32, 1-2 channels,
// little-endian. PCM16 samples are scaled by 1/32768. A zero-frame data
// chunk yields an empty buffer.
AudioBuffer read_wav(const std::string& path);

// Writes `buffer` to `path`. For pcm16, samples outside [-1, 1] are clamped
// and counted. Returns the number of clipped samples (always 0 for float32).
std::size_t write_wav(const std::string& path, const AudioBuffer& buffer,
                      const WavWriteOptions& options = {});

}  // namespace revmix

#endif  // REVMIX_WAV_IO_HPP_
