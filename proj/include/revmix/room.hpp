// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_ROOM_HPP_
#define REVMIX_ROOM_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace revmix {

// Speed of sound, m/s (air at 20 C).
inline constexpr double kSpeedOfSound = 343.0;

enum class ReverbClass { high, medium, low };

std::string to_string(ReverbClass c);
ReverbClass reverb_class_from_string(const std::string& s);

// Target decay-time sampling range per class, seconds.
struct T60Range {
  double lo, hi;
};
T60Range t60_range(ReverbClass c);

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline double distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

struct SourcePlacement {
  double height = 0.0;    // meters above the floor
  double distance = 0.0;  // horizontal distance from the microphone center
  double azimuth = 0.0;   // radians
};

// One sampled acoustic scene: a shoebox room, a target decay time, a
// two-microphone pair near the room center and two speech source positions.
struct RoomSpec {
  double length = 0.0, width = 0.0, height = 0.0;  // room box, meters
  double t60_target = 0.0;                         // seconds
  ReverbClass reverb_class = ReverbClass::medium;
  Vec3 mic_center;
  double mic_separation = 0.0;   // meters
  double mic_axis_angle = 0.0;   // radians
  std::array<SourcePlacement, 2> sources;
  std::uint64_t rng_seed = 0;

  Vec3 mic_position(int index) const;     // index 0 = left, 1 = right
  Vec3 source_position(int index) const;
};

void to_json(nlohmann::json& j, const RoomSpec& spec);
void from_json(const nlohmann::json& j, RoomSpec& spec);

// Draws a scene from the corpus sampling distributions: room length/width
// U(5,10) m, height U(3,4) m, T60 from the class range, microphone center
// within +-0.2 m of the room center at height U(0.9,1.8) m, microphone
// separation U(0.15,0.17) m unless overridden, source heights U(0.9,1.8) m,
// distances U(0.66,2) m and azimuths U(0,2pi). Placements violating the
// 0.1 m wall clearance are re-drawn (bounded at 1000 attempts).
// Deterministic: the same seed yields the same spec, field for field.
RoomSpec sample_room(std::uint64_t seed, ReverbClass reverb_class,
                     std::optional<double> mic_separation_override = std::nullopt);

// Uniform wall absorption for a target decay time: Sabine inversion
// alpha = 0.161 V / (S t60); if that reaches 1, the Eyring inversion
// alpha = 1 - exp(-0.161 V / (S t60)) is used instead. Returns alpha in (0,1).
double t60_to_absorption(double length, double width, double height, double t60);

}  // namespace revmix

#endif  // REVMIX_ROOM_HPP_
