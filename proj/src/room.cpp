// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "revmix/room.hpp"

#include <cmath>
#include <numbers>

#include "revmix/errors.hpp"
#include "revmix/rng.hpp"

namespace revmix {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWallClearance = 0.1;
constexpr int kMaxPlacementAttempts = 1000;

bool inside_with_clearance(const Vec3& p, double L, double W, double H) {
  return p.x >= kWallClearance && p.x <= L - kWallClearance && p.y >= kWallClearance &&
         p.y <= W - kWallClearance && p.z >= kWallClearance && p.z <= H - kWallClearance;
}

}  // namespace

std::string to_string(ReverbClass c) {
  switch (c) {
    case ReverbClass::high: return "high";
    case ReverbClass::medium: return "medium";
    case ReverbClass::low: return "low";
  }
  return "medium";
}

ReverbClass reverb_class_from_string(const std::string& s) {
  if (s == "high") return ReverbClass::high;
  if (s == "medium" || s == "med") return ReverbClass::medium;
  if (s == "low") return ReverbClass::low;
  throw InvalidArgument("unknown reverb class: " + s);
}

T60Range t60_range(ReverbClass c) {
  switch (c) {
    case ReverbClass::high: return {0.4, 1.0};
    case ReverbClass::medium: return {0.2, 0.6};
    case ReverbClass::low: return {0.1, 0.3};
  }
  return {0.2, 0.6};
}

Vec3 RoomSpec::mic_position(int index) const {
  const double sign = index == 0 ? -0.5 : 0.5;
  return {mic_center.x + sign * mic_separation * std::cos(mic_axis_angle),
          mic_center.y + sign * mic_separation * std::sin(mic_axis_angle), mic_center.z};
}

Vec3 RoomSpec::source_position(int index) const {
  const SourcePlacement& s = sources[static_cast<std::size_t>(index)];
  return {mic_center.x + s.distance * std::cos(s.azimuth),
          mic_center.y + s.distance * std::sin(s.azimuth), s.height};
}

void to_json(nlohmann::json& j, const RoomSpec& spec) {
  j = nlohmann::json{
      {"length", spec.length},
      {"width", spec.width},
      {"height", spec.height},
      {"t60_target", spec.t60_target},
      {"reverb_class", to_string(spec.reverb_class)},
      {"mic_center", {spec.mic_center.x, spec.mic_center.y, spec.mic_center.z}},
      {"mic_separation", spec.mic_separation},
      {"mic_axis_angle", spec.mic_axis_angle},
      {"sources", nlohmann::json::array()},
      {"rng_seed", spec.rng_seed},
  };
  for (const auto& s : spec.sources) {
    j["sources"].push_back({{"height", s.height}, {"distance", s.distance}, {"azimuth", s.azimuth}});
  }
}

void from_json(const nlohmann::json& j, RoomSpec& spec) {
  spec.length = j.at("length").get<double>();
  spec.width = j.at("width").get<double>();
  spec.height = j.at("height").get<double>();
  spec.t60_target = j.at("t60_target").get<double>();
  spec.reverb_class = reverb_class_from_string(j.at("reverb_class").get<std::string>());
  const auto& mc = j.at("mic_center");
  spec.mic_center = {mc.at(0).get<double>(), mc.at(1).get<double>(), mc.at(2).get<double>()};
  spec.mic_separation = j.at("mic_separation").get<double>();
  spec.mic_axis_angle = j.at("mic_axis_angle").get<double>();
  const auto& srcs = j.at("sources");
  for (std::size_t i = 0; i < 2; ++i) {
    spec.sources[i].height = srcs.at(i).at("height").get<double>();
    spec.sources[i].distance = srcs.at(i).at("distance").get<double>();
    spec.sources[i].azimuth = srcs.at(i).at("azimuth").get<double>();
  }
  spec.rng_seed = j.at("rng_seed").get<std::uint64_t>();
}

RoomSpec sample_room(std::uint64_t seed, ReverbClass reverb_class,
                     std::optional<double> mic_separation_override) {
  CounterRng rng(seed);
  RoomSpec spec;
  spec.rng_seed = seed;
  spec.reverb_class = reverb_class;
  spec.length = rng.uniform(5.0, 10.0);
  spec.width = rng.uniform(5.0, 10.0);
  spec.height = rng.uniform(3.0, 4.0);
  const T60Range range = t60_range(reverb_class);
  spec.t60_target = rng.uniform(range.lo, range.hi);
  spec.mic_center.x = spec.length / 2.0 + rng.uniform(-0.2, 0.2);
  spec.mic_center.y = spec.width / 2.0 + rng.uniform(-0.2, 0.2);
  spec.mic_center.z = rng.uniform(0.9, 1.8);
  spec.mic_separation =
      mic_separation_override ? *mic_separation_override : rng.uniform(0.15, 0.17);
  spec.mic_axis_angle = rng.uniform(0.0, kTwoPi);

  for (int attempt = 0;; ++attempt) {
    if (attempt >= kMaxPlacementAttempts) {
      throw Error("sample_room: no valid microphone placement found");
    }
    if (inside_with_clearance(spec.mic_position(0), spec.length, spec.width, spec.height) &&
        inside_with_clearance(spec.mic_position(1), spec.length, spec.width, spec.height)) {
      break;
    }
    spec.mic_axis_angle = rng.uniform(0.0, kTwoPi);
  }

  for (int i = 0; i < 2; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kMaxPlacementAttempts) {
        throw Error("sample_room: no valid source placement found");
      }
      spec.sources[static_cast<std::size_t>(i)].height = rng.uniform(0.9, 1.8);
      spec.sources[static_cast<std::size_t>(i)].distance = rng.uniform(0.66, 2.0);
      spec.sources[static_cast<std::size_t>(i)].azimuth = rng.uniform(0.0, kTwoPi);
      if (inside_with_clearance(spec.source_position(i), spec.length, spec.width, spec.height)) {
        break;
      }
    }
  }
  return spec;
}

double t60_to_absorption(double length, double width, double height, double t60) {
  if (t60 <= 0.0) throw InvalidArgument("t60_to_absorption: t60 must be positive");
  const double volume = length * width * height;
  const double surface = 2.0 * (length * width + length * height + width * height);
  const double sabine = 0.161 * volume / (surface * t60);
  if (sabine < 1.0) return sabine;
  return 1.0 - std::exp(-0.161 * volume / (surface * t60));
}

}  // namespace revmix
