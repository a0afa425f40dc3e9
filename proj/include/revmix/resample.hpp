// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_RESAMPLE_HPP_
#define REVMIX_RESAMPLE_HPP_

#include "revmix/audio_buffer.hpp"

namespace revmix {

// Band-limited sample rate conversion via a polyphase Kaiser-windowed sinc
// filter (64 taps per phase, beta sized for an 80 dB stopband). The output
// holds round(frames * target / source) frames and is delay-compensated, so
// durations in seconds are preserved to within one output sample.
AudioBuffer resample(const AudioBuffer& buffer, int target_rate);

}  // namespace revmix

#endif  // REVMIX_RESAMPLE_HPP_
