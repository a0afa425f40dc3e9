// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "revmix/wav_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace revmix {
namespace {

static_assert(std::endian::native == std::endian::little,
              "WAV I/O assumes a little-endian host");

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

template <typename T>
T read_le(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

float to_float32(double x) { return static_cast<float>(x); }

}  // namespace

AudioBuffer read_wav(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("read_wav: cannot open " + path);

  char magic[4];
  f.read(magic, 4);
  std::uint32_t riff_size = read_le<std::uint32_t>(f);
  (void)riff_size;
  char wave[4];
  f.read(wave, 4);
  if (!f || std::memcmp(magic, "RIFF", 4) != 0 || std::memcmp(wave, "WAVE", 4) != 0) {
    throw FormatError("read_wav: not a RIFF/WAVE file: " + path);
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  bool have_fmt = false;
  std::vector<char> data;
  bool have_data = false;

  while (true) {
    char id[4];
    f.read(id, 4);
    if (!f) break;
    std::uint32_t size = read_le<std::uint32_t>(f);
    if (!f) throw FormatError("read_wav: truncated chunk header in " + path);
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (size < 16) throw FormatError("read_wav: invalid fmt chunk in " + path);
      std::vector<char> fmt(size);
      f.read(fmt.data(), size);
      if (!f) throw FormatError("read_wav: truncated fmt chunk in " + path);
      std::memcpy(&format, fmt.data() + 0, 2);
      std::memcpy(&channels, fmt.data() + 2, 2);
      std::memcpy(&sample_rate, fmt.data() + 4, 4);
      std::memcpy(&bits, fmt.data() + 14, 2);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data.resize(size);
      f.read(data.data(), size);
      if (f.gcount() != static_cast<std::streamsize>(size)) {
        throw FormatError("read_wav: truncated data chunk in " + path);
      }
      have_data = true;
    } else {
      f.seekg(size, std::ios::cur);
    }
    if (size % 2 == 1) f.seekg(1, std::ios::cur);  // chunks are word-aligned
  }

  if (!have_fmt || !have_data) {
    throw FormatError("read_wav: missing fmt or data chunk in " + path);
  }
  if (channels < 1 || channels > 2) {
    throw FormatError("read_wav: unsupported channel count in " + path);
  }
  if (sample_rate == 0) throw FormatError("read_wav: zero sample rate in " + path);

  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool f32 = format == kFormatIeeeFloat && bits == 32;
  if (!pcm16 && !f32) {
    throw FormatError("read_wav: unsupported encoding (format " + std::to_string(format) +
                      ", " + std::to_string(bits) + " bit) in " + path);
  }

  const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::size_t frame_bytes = bytes_per_sample * channels;
  const std::size_t frames = data.size() / frame_bytes;

  AudioBuffer out(channels, frames == 0 ? 1 : frames, static_cast<int>(sample_rate));
  if (frames == 0) return out.resized(0);

  for (std::size_t n = 0; n < frames; ++n) {
    for (std::size_t c = 0; c < channels; ++c) {
      const char* p = data.data() + (n * channels + c) * bytes_per_sample;
      if (pcm16) {
        std::int16_t v;
        std::memcpy(&v, p, 2);
        out.at(c, n) = static_cast<double>(v) / 32768.0;
      } else {
        float v;
        std::memcpy(&v, p, 4);
        out.at(c, n) = static_cast<double>(v);
      }
    }
  }
  return out;
}

std::size_t write_wav(const std::string& path, const AudioBuffer& buffer,
                      const WavWriteOptions& options) {
  const bool pcm16 = options.encoding == WavEncoding::pcm16;
  const std::size_t channels = buffer.channels();
  const std::size_t frames = buffer.frames();
  const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(frames * channels * bytes_per_sample);

  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("write_wav: cannot open " + path);

  f.write("RIFF", 4);
  write_le<std::uint32_t>(f, 36 + data_size);
  f.write("WAVE", 4);
  f.write("fmt ", 4);
  write_le<std::uint32_t>(f, 16);
  write_le<std::uint16_t>(f, pcm16 ? kFormatPcm : kFormatIeeeFloat);
  write_le<std::uint16_t>(f, static_cast<std::uint16_t>(channels));
  write_le<std::uint32_t>(f, static_cast<std::uint32_t>(buffer.sample_rate()));
  write_le<std::uint32_t>(f, static_cast<std::uint32_t>(buffer.sample_rate() * channels *
                                                        bytes_per_sample));
  write_le<std::uint16_t>(f, static_cast<std::uint16_t>(channels * bytes_per_sample));
  write_le<std::uint16_t>(f, pcm16 ? 16 : 32);
  f.write("data", 4);
  write_le<std::uint32_t>(f, data_size);

  std::size_t clipped = 0;
  for (std::size_t n = 0; n < frames; ++n) {
    for (std::size_t c = 0; c < channels; ++c) {
      const double x = buffer.at(c, n);
      if (pcm16) {
        double y = x;
        if (y > 1.0) {
          y = 1.0;
          ++clipped;
        } else if (y < -1.0) {
          y = -1.0;
          ++clipped;
        }
        const double scaled = y * 32768.0;
        const std::int16_t v = static_cast<std::int16_t>(
            std::clamp(std::lround(scaled), -32768L, 32767L));
        write_le<std::int16_t>(f, v);
      } else {
        write_le<float>(f, to_float32(x));
      }
    }
  }
  if (!f) throw IoError("write_wav: write failed for " + path);
  f.close();

  const std::size_t total = frames * channels;
  if (total > 0 &&
      static_cast<double>(clipped) / static_cast<double>(total) > options.max_clip_fraction) {
    throw Error("write_wav: clip fraction exceeds limit for " + path);
  }
  return clipped;
}

}  // namespace revmix
