// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "revmix/rt60.hpp"

#include <cmath>
#include <vector>

#include "revmix/errors.hpp"

namespace revmix {

double measure_t60(const Rir& rir) {
  const std::size_t n = rir.taps.size();
  if (n == 0) throw InvalidArgument("measure_t60: empty impulse response");

  // Backward energy integration (Schroeder curve), in dB re total energy.
  std::vector<double> curve(n);
  double acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    acc += rir.taps[i] * rir.taps[i];
    curve[i] = acc;
  }
  if (acc <= 0.0) throw InvalidArgument("measure_t60: zero-energy impulse response");
  const double total = acc;
  for (std::size_t i = 0; i < n; ++i) {
    curve[i] = 10.0 * std::log10(std::max(curve[i] / total, 1e-30));
  }

  std::size_t i5 = n, i25 = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (i5 == n && curve[i] <= -5.0) i5 = i;
    if (curve[i] <= -25.0) {
      i25 = i;
      break;
    }
  }
  if (i5 == n || i25 == n || i25 <= i5 + 1) {
    throw InsufficientDecay("measure_t60: decay never spans the -5..-25 dB fit range");
  }

  // Least-squares line over the -5..-25 dB segment; T60 extrapolates the
  // fitted slope to a 60 dB drop.
  const double fs = static_cast<double>(rir.sample_rate);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = static_cast<double>(i25 - i5 + 1);
  for (std::size_t i = i5; i <= i25; ++i) {
    const double x = static_cast<double>(i) / fs;
    sx += x;
    sy += curve[i];
    sxx += x * x;
    sxy += x * curve[i];
  }
  const double denom = count * sxx - sx * sx;
  if (denom <= 0.0) throw InsufficientDecay("measure_t60: degenerate fit segment");
  const double slope = (count * sxy - sx * sy) / denom;
  if (slope >= 0.0) throw InsufficientDecay("measure_t60: non-decaying energy curve");
  return -60.0 / slope;
}

}  // namespace revmix
