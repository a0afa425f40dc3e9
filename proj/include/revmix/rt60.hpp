// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_RT60_HPP_
#define REVMIX_RT60_HPP_

#include "revmix/image_source.hpp"

namespace revmix {

// Reverberation time from Schroeder backward energy integration: a line is
// fit to the -5..-25 dB segment of the decay curve and extrapolated to
// -60 dB. Scale invariant. Throws InsufficientDecay when the curve never
// reaches the fit range, InvalidArgument on zero-energy input.
double measure_t60(const Rir& rir);

}  // namespace revmix

#endif  // REVMIX_RT60_HPP_
