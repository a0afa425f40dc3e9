// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_IMAGE_SOURCE_HPP_
#define REVMIX_IMAGE_SOURCE_HPP_

#include <optional>
#include <vector>

#include "revmix/room.hpp"

namespace revmix {

// A room impulse response for one (source, microphone) pair.
struct Rir {
  std::vector<double> taps;
  int sample_rate = 0;
  double direct_delay = 0.0;  // fractional samples, ||source - mic|| / c * fs
  double direct_gain = 0.0;   // linear amplitude of the direct path, 1 / (4 pi d)
};

struct RirOptions {
  // Tap length in seconds; defaults to 1.5 * t60_target.
  std::optional<double> duration;
  // Caps the total reflection order; 0 keeps only the direct path.
  std::optional<int> max_order;
  // Bypasses the absorption solve with a fixed wall absorption in (0, 1].
  std::optional<double> absorption;
};

// Uniform wall absorption that makes the synthesized response's measured
// decay time match spec.t60_target. Starts from t60_to_absorption and
// refines with a bounded fixed-point iteration against the Schroeder
// measurement of the rendered response (source 0, microphone 0), because a
// frequency-flat image-source tail decays slower than the diffuse-field
// formulas predict. Deterministic in (spec, sample_rate).
double calibrated_absorption(const RoomSpec& spec, int sample_rate);

// Shoebox image-source synthesis. Mirrors the source across the walls up to
// the distance that covers the tap length, placing each image at its
// fractional delay with an 81-tap Hann-windowed sinc kernel and amplitude
// (1 - alpha)^(reflections / 2) / (4 pi d).
Rir image_source_rir(const RoomSpec& spec, int source_index, int mic_index, int sample_rate,
                     const RirOptions& options = {});

// Order-0 image only: after unit-gain normalization this is a pure
// fractional delay, the anechoic rendering kernel.
Rir direct_path_rir(const RoomSpec& spec, int source_index, int mic_index, int sample_rate);

}  // namespace revmix

#endif  // REVMIX_IMAGE_SOURCE_HPP_
