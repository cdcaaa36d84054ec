#pragma once

// Reference computations used only by tests. Each one takes a route that does
// not share code with the library function it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "arcinterp/types.hpp"

namespace arcinterp::oracle {

/// Position at time t of the point that starts at the origin and reaches
/// (u, v) by rigid rotation through angle omega about a center chosen to
/// make that happen. Solves (I - R(omega)) c = (u, v) for the center.
inline Vec2 rotation_path(double u, double v, double omega, double t) {
  const double c = std::cos(omega);
  const double s = std::sin(omega);
  // I - R = [[1 - c, s], [-s, 1 - c]], det = (1-c)^2 + s^2
  const double a = 1.0 - c;
  const double det = a * a + s * s;
  const double cx = (a * u - s * v) / det;
  const double cy = (s * u + a * v) / det;
  const double ct = std::cos(omega * t);
  const double st = std::sin(omega * t);
  // rotate (0,0) about (cx, cy) by omega t
  return {cx + ct * (-cx) - st * (-cy), cy + st * (-cx) + ct * (-cy)};
}

/// Literal form of the arc displacement: R (cos theta_t - cos theta_0),
/// R (sin theta_t - sin theta_0).
inline Vec2 literal_arc(double u, double v, double sigma, double t) {
  const double d = std::sqrt(u * u + v * v);
  const double alpha = std::atan2(v, u);
  const double beta = std::asin(sigma);
  const double r = d / (2.0 * sigma);
  const double pi = std::acos(-1.0);
  const double th0 = alpha + pi / 2 + beta;
  const double tht = -2.0 * beta * t + alpha + pi / 2 + beta;
  return {r * (std::cos(tht) - std::cos(th0)), r * (std::sin(tht) - std::sin(th0))};
}

inline double tent(double x) { return std::max(0.0, 1.0 - std::abs(x)); }

/// Accumulated splat weight at each target by summing tent kernels over all
/// sources: O(N^2).
inline std::vector<double> brute_force_weights(const FlowField& flow) {
  const int w = flow.width();
  const int h = flow.height();
  std::vector<double> out(static_cast<std::size_t>(w * h), 0.0);
  for (int ty = 0; ty < h; ++ty) {
    for (int tx = 0; tx < w; ++tx) {
      double acc = 0.0;
      for (int sy = 0; sy < h; ++sy) {
        for (int sx = 0; sx < w; ++sx) {
          const Vec2 f = flow.at(sx, sy);
          acc += tent(sx + f.x - tx) * tent(sy + f.y - ty);
        }
      }
      out[static_cast<std::size_t>(ty * w + tx)] = acc;
    }
  }
  return out;
}

/// Total in-frame weight: area of each unit square centered on a landing
/// point intersected with the frame rectangle [-0.5, W-0.5] x [-0.5, H-0.5].
inline double in_frame_area(const FlowField& flow) {
  const auto overlap = [](double center, double lo, double hi) {
    return std::max(0.0, std::min(center + 0.5, hi) - std::max(center - 0.5, lo));
  };
  double total = 0.0;
  for (int y = 0; y < flow.height(); ++y) {
    for (int x = 0; x < flow.width(); ++x) {
      const Vec2 f = flow.at(x, y);
      total += overlap(x + f.x, -0.5, flow.width() - 0.5) *
               overlap(y + f.y, -0.5, flow.height() - 0.5);
    }
  }
  return total;
}

inline double brute_mse(const Image& a, const Image& b) {
  double sum = 0.0;
  long double count = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      for (int c = 0; c < a.channels(); ++c) {
        const double d = static_cast<double>(a.at(x, y, c)) - b.at(x, y, c);
        sum += d * d;
        count += 1;
      }
    }
  }
  return sum / static_cast<double>(count);
}

inline double brute_psnr(const Image& a, const Image& b) {
  return -10.0 * std::log10(brute_mse(a, b));
}

inline double brute_ie(const Image& a, const Image& b) {
  double sum = 0.0;
  double count = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      for (int c = 0; c < a.channels(); ++c) {
        const double d = 255.0 * a.at(x, y, c) - 255.0 * b.at(x, y, c);
        sum += d * d;
        count += 1;
      }
    }
  }
  return std::sqrt(sum / count);
}

inline double brute_charbonnier(const Image& a, const Image& b, double eps) {
  double sum = 0.0;
  double count = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      for (int c = 0; c < a.channels(); ++c) {
        const double d = static_cast<double>(a.at(x, y, c)) - b.at(x, y, c);
        sum += std::sqrt(d * d + eps * eps);
        count += 1;
      }
    }
  }
  return sum / count;
}

inline Image random_image(std::mt19937_64& rng, Extent extent, int channels) {
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  Image img(extent, channels);
  for (float& s : img.samples()) {
    s = dist(rng);
  }
  return img;
}

inline FlowField random_flow(std::mt19937_64& rng, Extent extent, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  FlowField flow(extent);
  for (int y = 0; y < extent.height; ++y) {
    for (int x = 0; x < extent.width; ++x) {
      flow.set(x, y, {dist(rng), dist(rng)});
    }
  }
  return flow;
}

/// Random flow whose components are exactly representable as float32.
inline FlowField random_float_flow(std::mt19937_64& rng, Extent extent, double scale) {
  FlowField flow = random_flow(rng, extent, scale);
  for (double& u : flow.u()) u = static_cast<float>(u);
  for (double& v : flow.v()) v = static_cast<float>(v);
  return flow;
}

}  // namespace arcinterp::oracle
