// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "revmix/image_source.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "revmix/errors.hpp"
#include "revmix/rt60.hpp"

namespace revmix {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kKernelHalf = 40;  // 81-tap fractional-delay kernel
constexpr int kKernelTaps = 2 * kKernelHalf + 1;

struct AxisImages {
  std::vector<double> offset;  // image coordinate minus mic coordinate
  std::vector<int> reflections;
};

// One mirrored axis: for block index m and parity q in {0,1}, the image
// coordinate is (1-2q)*src + 2*m*dim, with |m-q| + |m| wall hits.
AxisImages axis_images(double src, double mic, double dim, int blocks) {
  AxisImages out;
  out.offset.reserve(2 * (2 * blocks + 1));
  out.reflections.reserve(2 * (2 * blocks + 1));
  for (int q = 0; q <= 1; ++q) {
    for (int m = -blocks; m <= blocks; ++m) {
      out.offset.push_back((1 - 2 * q) * src + 2.0 * m * dim - mic);
      out.reflections.push_back(std::abs(m - q) + std::abs(m));
    }
  }
  return out;
}

struct KernelTables {
  double cos_t[kKernelTaps];
  double sin_t[kKernelTaps];
  double sign[kKernelTaps];  // (-1)^k
  KernelTables() {
    for (int k = -kKernelHalf; k <= kKernelHalf; ++k) {
      const double a = 2.0 * kPi * k / static_cast<double>(kKernelTaps);
      cos_t[k + kKernelHalf] = std::cos(a);
      sin_t[k + kKernelHalf] = std::sin(a);
      sign[k + kKernelHalf] = (k & 1) ? -1.0 : 1.0;
    }
  }
};

const KernelTables& kernel_tables() {
  static const KernelTables tables;
  return tables;
}

// Adds gain * hann_windowed_sinc(n - delay) into taps. The sinc factors as
// sin(pi*(k - f)) = -(-1)^k sin(pi*f) and the window cosine expands against
// per-tap tables, so the whole kernel costs three trig calls per image.
void place_image(std::vector<double>& taps, double delay, double gain) {
  const KernelTables& t = kernel_tables();
  const long n0 = std::lround(delay);
  const double f = delay - static_cast<double>(n0);  // in [-0.5, 0.5]
  const double sin_pif = std::sin(kPi * f);
  const double wb = 2.0 * kPi * f / static_cast<double>(kKernelTaps);
  const double cb = std::cos(wb), sb = std::sin(wb);
  const long len = static_cast<long>(taps.size());

  const long lo = std::max(-static_cast<long>(kKernelHalf), -n0);
  const long hi = std::min(static_cast<long>(kKernelHalf), len - 1 - n0);
  double* out = taps.data() + n0;
  for (long k = lo; k <= hi; ++k) {
    const int ki = static_cast<int>(k) + kKernelHalf;
    const double u = static_cast<double>(k) - f;
    const double sinc = u == 0.0 ? 1.0 : -t.sign[ki] * sin_pif / (kPi * u);
    const double window = 0.5 * (1.0 + t.cos_t[ki] * cb + t.sin_t[ki] * sb);
    out[k] += gain * window * sinc;
  }
}

struct BuildParams {
  double alpha = 0.0;
  std::size_t length = 0;
  std::optional<int> max_order;
};

Rir build_rir(const RoomSpec& spec, int source_index, int mic_index, int sample_rate,
              const BuildParams& params) {
  const Vec3 src = spec.source_position(source_index);
  const Vec3 mic = spec.mic_position(mic_index);
  const double fs = static_cast<double>(sample_rate);
  const double samples_per_meter = fs / kSpeedOfSound;

  Rir rir;
  rir.sample_rate = sample_rate;
  const double d0 = distance(src, mic);
  rir.direct_delay = d0 * samples_per_meter;
  rir.direct_gain = 1.0 / (4.0 * kPi * d0);

  const std::size_t min_len =
      static_cast<std::size_t>(std::ceil(rir.direct_delay)) + kKernelHalf + 2;
  rir.taps.assign(std::max(params.length, min_len), 0.0);

  const double max_dist =
      (static_cast<double>(rir.taps.size()) + kKernelHalf + 1) / samples_per_meter;

  const int bx = static_cast<int>(std::ceil(max_dist / (2.0 * spec.length)));
  const int by = static_cast<int>(std::ceil(max_dist / (2.0 * spec.width)));
  const int bz = static_cast<int>(std::ceil(max_dist / (2.0 * spec.height)));
  const AxisImages ax = axis_images(src.x, mic.x, spec.length, bx);
  const AxisImages ay = axis_images(src.y, mic.y, spec.width, by);
  const AxisImages az = axis_images(src.z, mic.z, spec.height, bz);

  // (1 - alpha)^(n/2) per total reflection count, precomputed.
  const int max_refl = 2 * (bx + by + bz) + 3;
  std::vector<double> refl_gain(static_cast<std::size_t>(max_refl) + 1);
  const double r = std::sqrt(std::max(0.0, 1.0 - params.alpha));
  refl_gain[0] = 1.0;
  for (int n = 1; n <= max_refl; ++n) refl_gain[static_cast<std::size_t>(n)] = refl_gain[n - 1] * r;

  const double max_dist2 = max_dist * max_dist;
  const double inv_4pi = 1.0 / (4.0 * kPi);
  for (std::size_t ix = 0; ix < ax.offset.size(); ++ix) {
    const double dx2 = ax.offset[ix] * ax.offset[ix];
    if (dx2 > max_dist2) continue;
    for (std::size_t iy = 0; iy < ay.offset.size(); ++iy) {
      const double dxy2 = dx2 + ay.offset[iy] * ay.offset[iy];
      if (dxy2 > max_dist2) continue;
      const int refl_xy = ax.reflections[ix] + ay.reflections[iy];
      for (std::size_t iz = 0; iz < az.offset.size(); ++iz) {
        const double d2 = dxy2 + az.offset[iz] * az.offset[iz];
        if (d2 > max_dist2) continue;
        const int refl = refl_xy + az.reflections[iz];
        if (params.max_order && refl > *params.max_order) continue;
        if (r == 0.0 && refl > 0) continue;
        const double d = std::sqrt(d2);
        const double gain = refl_gain[static_cast<std::size_t>(refl)] * inv_4pi / std::max(d, 0.01);
        place_image(rir.taps, d * samples_per_meter, gain);
      }
    }
  }
  return rir;
}

std::size_t default_length(const RoomSpec& spec, int sample_rate, const RirOptions& options) {
  const double seconds = options.duration ? *options.duration : 1.5 * spec.t60_target;
  return static_cast<std::size_t>(std::ceil(seconds * sample_rate));
}

}  // namespace

double calibrated_absorption(const RoomSpec& spec, int sample_rate) {
  double alpha = t60_to_absorption(spec.length, spec.width, spec.height, spec.t60_target);
  const std::size_t length =
      static_cast<std::size_t>(std::ceil(1.5 * spec.t60_target * sample_rate));
  for (int iter = 0; iter < 8; ++iter) {
    const Rir probe = build_rir(spec, 0, 0, sample_rate, {alpha, length, std::nullopt});
    double measured;
    try {
      measured = measure_t60(probe);
    } catch (const Error&) {
      break;
    }
    const double ratio = measured / spec.t60_target;
    if (std::abs(ratio - 1.0) <= 0.05) break;
    alpha = std::clamp(1.0 - std::pow(1.0 - alpha, ratio), 1e-4, 0.9999);
  }
  return alpha;
}

Rir image_source_rir(const RoomSpec& spec, int source_index, int mic_index, int sample_rate,
                     const RirOptions& options) {
  if (source_index < 0 || source_index > 1 || mic_index < 0 || mic_index > 1) {
    throw InvalidArgument("image_source_rir: source and mic index must be 0 or 1");
  }
  if (sample_rate <= 0) throw InvalidArgument("image_source_rir: bad sample rate");
  BuildParams params;
  params.length = default_length(spec, sample_rate, options);
  params.max_order = options.max_order;
  if (options.absorption) {
    if (*options.absorption <= 0.0 || *options.absorption > 1.0) {
      throw InvalidArgument("image_source_rir: absorption must be in (0, 1]");
    }
    params.alpha = *options.absorption;
  } else {
    params.alpha = calibrated_absorption(spec, sample_rate);
  }
  return build_rir(spec, source_index, mic_index, sample_rate, params);
}

Rir direct_path_rir(const RoomSpec& spec, int source_index, int mic_index, int sample_rate) {
  if (source_index < 0 || source_index > 1 || mic_index < 0 || mic_index > 1) {
    throw InvalidArgument("direct_path_rir: source and mic index must be 0 or 1");
  }
  if (sample_rate <= 0) throw InvalidArgument("direct_path_rir: bad sample rate");
  BuildParams params;
  params.alpha = 1.0;
  params.max_order = 0;
  params.length = 0;  // build_rir extends to cover the direct kernel
  return build_rir(spec, source_index, mic_index, sample_rate, params);
}

}  // namespace revmix
