#include "arcinterp/fuse.hpp"

#include <string>

#include "arcinterp/errors.hpp"

namespace arcinterp {

Image blend(const WarpedImage& warp0, const WarpedImage& warp1, const Image& frame0,
            const Image& frame1, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InputError("blend: t = " + std::to_string(t) + " outside [0, 1]");
  }
  const Extent extent = frame0.extent();
  require_same_extent(warp0.image.extent(), extent, "blend");
  require_same_extent(warp1.image.extent(), extent, "blend");
  require_same_extent(warp0.mask.extent(), extent, "blend");
  require_same_extent(warp1.mask.extent(), extent, "blend");
  require_same_extent(frame1.extent(), extent, "blend");
  const int channels = frame0.channels();
  if (warp0.image.channels() != channels || warp1.image.channels() != channels ||
      frame1.channels() != channels) {
    throw InputError("blend: channel count mismatch");
  }

  const double w0 = 1.0 - t;
  const double w1 = t;
  Image out(extent, channels);
  for (int y = 0; y < extent.height; ++y) {
    for (int x = 0; x < extent.width; ++x) {
      const bool valid0 = warp0.mask.at(x, y);
      const bool valid1 = warp1.mask.at(x, y);
      for (int c = 0; c < channels; ++c) {
        double value;
        if (valid0 && valid1) {
          value = w0 * warp0.image.at(x, y, c) + w1 * warp1.image.at(x, y, c);
        } else if (valid0) {
          value = warp0.image.at(x, y, c);
        } else if (valid1) {
          value = warp1.image.at(x, y, c);
        } else {
          value = w0 * frame0.at(x, y, c) + w1 * frame1.at(x, y, c);
        }
        out.at(x, y, c) = static_cast<float>(value);
      }
    }
  }
  return out;
}

}  // namespace arcinterp
