#include "arcinterp/warp.hpp"

#include <cmath>

#include "arcinterp/errors.hpp"

namespace arcinterp {

SplatResult splat_sum(const Image& source, const FlowField& flow) {
  require_same_extent(source.extent(), flow.extent(), "splat");
  flow.require_finite("splat");

  const Extent extent = source.extent();
  const int channels = source.channels();
  const auto nc = static_cast<std::size_t>(channels);

  SplatResult out;
  out.extent = extent;
  out.channels = channels;
  out.values.assign(extent.pixels() * nc, 0.0);
  out.weights.assign(extent.pixels(), 0.0);

  const auto deposit = [&](int tx, int ty, double w, int sx, int sy) {
    if (!extent.contains(tx, ty) || w == 0.0) {
      return;
    }
    const std::size_t cell =
        static_cast<std::size_t>(ty) * static_cast<std::size_t>(extent.width) +
        static_cast<std::size_t>(tx);
    out.weights[cell] += w;
    for (int c = 0; c < channels; ++c) {
      out.values[cell * nc + static_cast<std::size_t>(c)] +=
          w * static_cast<double>(source.at(sx, sy, c));
    }
  };

  for (int y = 0; y < extent.height; ++y) {
    for (int x = 0; x < extent.width; ++x) {
      const Vec2 d = flow.at(x, y);
      const double qx = static_cast<double>(x) + d.x;
      const double qy = static_cast<double>(y) + d.y;
      // Stencil entirely outside: skip before converting to int.
      if (qx <= -1.0 || qy <= -1.0 || qx >= extent.width || qy >= extent.height) {
        continue;
      }
      const double fx0 = std::floor(qx);
      const double fy0 = std::floor(qy);
      const double ax = qx - fx0;
      const double ay = qy - fy0;
      const int x0 = static_cast<int>(fx0);
      const int y0 = static_cast<int>(fy0);
      deposit(x0, y0, (1.0 - ax) * (1.0 - ay), x, y);
      deposit(x0 + 1, y0, ax * (1.0 - ay), x, y);
      deposit(x0, y0 + 1, (1.0 - ax) * ay, x, y);
      deposit(x0 + 1, y0 + 1, ax * ay, x, y);
    }
  }

  out.mask = Mask(extent);
  for (int y = 0; y < extent.height; ++y) {
    for (int x = 0; x < extent.width; ++x) {
      const std::size_t cell =
          static_cast<std::size_t>(y) * static_cast<std::size_t>(extent.width) +
          static_cast<std::size_t>(x);
      out.mask.set(x, y, out.weights[cell] > kHoleWeight);
    }
  }
  return out;
}

namespace {

Image normalize(const SplatResult& acc, int first_channel, int channels) {
  Image out(acc.extent, channels);
  const auto nc = static_cast<std::size_t>(acc.channels);
  for (int y = 0; y < acc.extent.height; ++y) {
    for (int x = 0; x < acc.extent.width; ++x) {
      if (!acc.mask.at(x, y)) {
        continue;
      }
      const std::size_t cell =
          static_cast<std::size_t>(y) * static_cast<std::size_t>(acc.extent.width) +
          static_cast<std::size_t>(x);
      const double w = acc.weights[cell];
      for (int c = 0; c < channels; ++c) {
        out.at(x, y, c) = static_cast<float>(
            acc.values[cell * nc + static_cast<std::size_t>(first_channel + c)] / w);
      }
    }
  }
  return out;
}

}  // namespace

WarpedImage splat_average(const Image& source, const FlowField& flow) {
  SplatResult acc = splat_sum(source, flow);
  Image image = normalize(acc, 0, acc.channels);
  return {std::move(image), std::move(acc.mask)};
}

WarpedBundle warp_bundle(std::span<const Image> maps, const FlowField& flow) {
  if (maps.empty()) {
    throw InputError("warp_bundle: no maps given");
  }
  int total = 0;
  for (const Image& m : maps) {
    require_same_extent(m.extent(), flow.extent(), "warp_bundle");
    total += m.channels();
  }

  Image stacked(flow.extent(), total);
  int offset = 0;
  for (const Image& m : maps) {
    for (int y = 0; y < flow.height(); ++y) {
      for (int x = 0; x < flow.width(); ++x) {
        for (int c = 0; c < m.channels(); ++c) {
          stacked.at(x, y, offset + c) = m.at(x, y, c);
        }
      }
    }
    offset += m.channels();
  }

  SplatResult acc = splat_sum(stacked, flow);
  WarpedBundle out;
  offset = 0;
  for (const Image& m : maps) {
    out.maps.push_back(normalize(acc, offset, m.channels()));
    offset += m.channels();
  }
  out.mask = std::move(acc.mask);
  return out;
}

}  // namespace arcinterp
