#include "arcinterp/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arcinterp/errors.hpp"

namespace arcinterp {

namespace {

std::string describe(Extent e) {
  return std::to_string(e.width) + "x" + std::to_string(e.height);
}

}  // namespace

void check_extent(Extent extent) {
  if (extent.width < 0 || extent.height < 0) {
    throw InputError("negative dimensions " + describe(extent));
  }
}

void require_same_extent(Extent a, Extent b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": dimension mismatch " + describe(a) + " vs " +
                     describe(b));
  }
}

FlowField::FlowField(Extent extent) : extent_(extent) {
  check_extent(extent);
  u_.assign(extent.pixels(), 0.0);
  v_.assign(extent.pixels(), 0.0);
}

FlowField FlowField::uniform(Extent extent, Vec2 value) {
  FlowField flow(extent);
  std::fill(flow.u_.begin(), flow.u_.end(), value.x);
  std::fill(flow.v_.begin(), flow.v_.end(), value.y);
  return flow;
}

void FlowField::require_finite(const char* what) const {
  for (std::size_t i = 0; i < u_.size(); ++i) {
    if (!std::isfinite(u_[i]) || !std::isfinite(v_[i])) {
      const auto w = static_cast<std::size_t>(std::max(extent_.width, 1));
      throw NumericError(std::string(what) + ": non-finite flow at (" + std::to_string(i % w) +
                         ", " + std::to_string(i / w) + ")");
    }
  }
}

SigmaMap::SigmaMap(Extent extent, double fill) : extent_(extent) {
  check_extent(extent);
  if (!(std::abs(fill) <= 1.0)) {
    throw NumericError("sigma fill value outside [-1, 1]");
  }
  values_.assign(extent.pixels(), fill);
}

SigmaMap SigmaMap::from_values(Extent extent, std::vector<double> values) {
  check_extent(extent);
  if (values.size() != extent.pixels()) {
    throw InputError("sigma map: expected " + std::to_string(extent.pixels()) + " values, got " +
                     std::to_string(values.size()));
  }
  for (double s : values) {
    if (!(std::abs(s) <= 1.0)) {
      throw NumericError("sigma value " + std::to_string(s) + " outside [-1, 1]");
    }
  }
  SigmaMap map;
  map.extent_ = extent;
  map.values_ = std::move(values);
  return map;
}

SigmaMap::Clamped SigmaMap::from_values_clamped(Extent extent, std::vector<double> values) {
  std::size_t clamped = 0;
  for (double& s : values) {
    if (std::isnan(s)) {
      throw NumericError("sigma value is NaN");
    }
    if (s > 1.0) {
      s = 1.0;
      ++clamped;
    } else if (s < -1.0) {
      s = -1.0;
      ++clamped;
    }
  }
  return {from_values(extent, std::move(values)), clamped};
}

Image::Image(Extent extent, int channels, float fill) : extent_(extent), channels_(channels) {
  check_extent(extent);
  if (channels < 1) {
    throw InputError("image needs at least one channel");
  }
  samples_.assign(extent.pixels() * static_cast<std::size_t>(channels), fill);
}

Mask::Mask(Extent extent, bool fill) : extent_(extent) {
  check_extent(extent);
  flags_.assign(extent.pixels(), fill ? 1 : 0);
}

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), std::uint8_t{1}));
}

Image sigma_to_image(const SigmaMap& sigma) {
  Image out(sigma.extent(), 1);
  auto dst = out.samples();
  auto src = sigma.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i] = static_cast<float>(src[i]);
  }
  return out;
}

Image mask_to_image(const Mask& mask) {
  Image out(mask.extent(), 1);
  for (int y = 0; y < mask.extent().height; ++y) {
    for (int x = 0; x < mask.extent().width; ++x) {
      out.at(x, y, 0) = mask.at(x, y) ? 1.0f : 0.0f;
    }
  }
  return out;
}

}  // namespace arcinterp
