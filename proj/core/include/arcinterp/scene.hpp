#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "arcinterp/types.hpp"

namespace arcinterp {

/// Rigid rotation about `center` by `omega` radians over unit time, using the
/// standard rotation matrix in image coordinates: (1, 0) -> (0, 1) for
/// omega = pi/2.
struct Rotation {
  Vec2 center;
  double omega = 0.0;
};

struct Translation {
  Vec2 offset;
};

using Motion = std::variant<Rotation, Translation>;

enum class Texture { value_noise, checkerboard };

/// Synthetic scene: a textured disc on a constant background under rigid
/// motion.
struct SceneSpec {
  Extent extent{128, 128};
  Motion motion = Rotation{{64.0, 64.0}, 0.0};
  Texture texture = Texture::value_noise;
  std::uint64_t seed = 1;
  double background = 0.5;
  /// Pattern scale in pixels (noise lattice spacing, checker square side).
  double feature_size = 8.0;
  /// Disc center at t = 0; defaults to the frame center.
  std::optional<Vec2> object_center;
  /// Disc radius; 0 means the texture covers the whole plane.
  double object_radius = 0.0;

  /// Throws InputError on nonpositive dimensions, |omega| > pi, background
  /// outside [0, 1], nonpositive feature size or negative radius.
  void validate() const;
};

struct GroundTruthFields {
  FlowField flow01;
  SigmaMap sigma01;
  FlowField flow10;
  SigmaMap sigma10;
};

/// Exact forward and backward flows and the curvature maps that make the arc
/// model reproduce the motion. Rotation by omega gives sigma01 = -sin(omega/2)
/// and sigma10 = +sin(omega/2) everywhere; translation gives sigma = 0.
GroundTruthFields ground_truth_fields(const SceneSpec& spec);

/// Scene rendered at time t with 4x4 supersampling, 3 channels.
Image ground_truth_frame(const SceneSpec& spec, double t);

/// Where the point at `p` in frame 0 is at time t, by direct evaluation of the
/// motion.
Vec2 oracle_intermediate_position(const SceneSpec& spec, Vec2 p, double t);

/// Parses the key = value scene format (see docs/scene_format.md).
SceneSpec parse_scene_spec(std::string_view text);
SceneSpec load_scene_spec(const std::filesystem::path& path);
std::string format_scene_spec(const SceneSpec& spec);

}  // namespace arcinterp
