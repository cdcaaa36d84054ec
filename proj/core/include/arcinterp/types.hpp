#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace arcinterp {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Extent {
  int width = 0;
  int height = 0;

  [[nodiscard]] std::size_t pixels() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  [[nodiscard]] bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width && y < height;
  }
  friend bool operator==(const Extent&, const Extent&) = default;
};

/// Throws InputError if either side is negative.
void check_extent(Extent extent);

/// Throws InputError naming `what` if the two extents differ.
void require_same_extent(Extent a, Extent b, const char* what);

/// Per-pixel 2-vector displacement in pixels, +x rightward (columns), +y
/// downward (rows), stored row-major as two planes.
class FlowField {
 public:
  FlowField() = default;
  explicit FlowField(Extent extent);
  static FlowField uniform(Extent extent, Vec2 value);

  [[nodiscard]] Extent extent() const { return extent_; }
  [[nodiscard]] int width() const { return extent_.width; }
  [[nodiscard]] int height() const { return extent_.height; }

  [[nodiscard]] Vec2 at(int x, int y) const {
    const std::size_t i = index(x, y);
    return {u_[i], v_[i]};
  }
  void set(int x, int y, Vec2 value) {
    const std::size_t i = index(x, y);
    u_[i] = value.x;
    v_[i] = value.y;
  }

  [[nodiscard]] std::span<const double> u() const { return u_; }
  [[nodiscard]] std::span<const double> v() const { return v_; }
  std::span<double> u() { return u_; }
  std::span<double> v() { return v_; }

  /// Throws NumericError if any component is NaN or infinite.
  void require_finite(const char* what) const;

  friend bool operator==(const FlowField&, const FlowField&) = default;

 private:
  [[nodiscard]] std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(extent_.width) +
           static_cast<std::size_t>(x);
  }

  Extent extent_;
  std::vector<double> u_;
  std::vector<double> v_;
};

/// Signed curvature measure per pixel: sigma = sin(half arc angle), always in
/// [-1, 1].
class SigmaMap {
 public:
  SigmaMap() = default;
  explicit SigmaMap(Extent extent, double fill = 0.0);

  /// Throws NumericError if a value is NaN or outside [-1, 1].
  static SigmaMap from_values(Extent extent, std::vector<double> values);

  struct Clamped;
  /// Values beyond +-1 are clamped and counted; NaN is still an error.
  static Clamped from_values_clamped(Extent extent, std::vector<double> values);

  [[nodiscard]] Extent extent() const { return extent_; }
  [[nodiscard]] int width() const { return extent_.width; }
  [[nodiscard]] int height() const { return extent_.height; }

  [[nodiscard]] double at(int x, int y) const { return values_[index(x, y)]; }
  [[nodiscard]] std::span<const double> values() const { return values_; }

  friend bool operator==(const SigmaMap&, const SigmaMap&) = default;

 private:
  [[nodiscard]] std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(extent_.width) +
           static_cast<std::size_t>(x);
  }

  Extent extent_;
  std::vector<double> values_;
};

struct SigmaMap::Clamped {
  SigmaMap map;
  std::size_t clamped_count = 0;
};

/// H x W x C float samples, interleaved, nominally in [0, 1].
class Image {
 public:
  Image() = default;
  Image(Extent extent, int channels, float fill = 0.0f);

  [[nodiscard]] Extent extent() const { return extent_; }
  [[nodiscard]] int width() const { return extent_.width; }
  [[nodiscard]] int height() const { return extent_.height; }
  [[nodiscard]] int channels() const { return channels_; }

  [[nodiscard]] float at(int x, int y, int c) const { return samples_[index(x, y, c)]; }
  float& at(int x, int y, int c) { return samples_[index(x, y, c)]; }

  [[nodiscard]] std::span<const float> samples() const { return samples_; }
  std::span<float> samples() { return samples_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  [[nodiscard]] std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(extent_.width) +
            static_cast<std::size_t>(x)) *
               static_cast<std::size_t>(channels_) +
           static_cast<std::size_t>(c);
  }

  Extent extent_;
  int channels_ = 0;
  std::vector<float> samples_;
};

/// Per-pixel validity flags.
class Mask {
 public:
  Mask() = default;
  explicit Mask(Extent extent, bool fill = false);

  [[nodiscard]] Extent extent() const { return extent_; }
  [[nodiscard]] bool at(int x, int y) const { return flags_[index(x, y)] != 0; }
  void set(int x, int y, bool value) { flags_[index(x, y)] = value ? 1 : 0; }
  [[nodiscard]] std::size_t count() const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  [[nodiscard]] std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(extent_.width) +
           static_cast<std::size_t>(x);
  }

  Extent extent_;
  std::vector<std::uint8_t> flags_;
};

/// Single-channel image holding the sigma values (for warping and dumping).
Image sigma_to_image(const SigmaMap& sigma);

/// Single-channel 0/1 image of a mask.
Image mask_to_image(const Mask& mask);

}  // namespace arcinterp
