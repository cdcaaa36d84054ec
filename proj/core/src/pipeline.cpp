#include "arcinterp/pipeline.hpp"

#include <array>

#include "arcinterp/errors.hpp"
#include "arcinterp/fuse.hpp"

namespace arcinterp {

Interpolation interpolate(const FramePair& in, double t, const ArcConfig& config) {
  const Extent extent = in.frame0.extent();
  require_same_extent(in.frame1.extent(), extent, "frame1");
  require_same_extent(in.flow01.extent(), extent, "flow01");
  require_same_extent(in.flow10.extent(), extent, "flow10");
  require_same_extent(in.sigma01.extent(), extent, "sigma01");
  require_same_extent(in.sigma10.extent(), extent, "sigma10");
  if (in.frame0.channels() != in.frame1.channels()) {
    throw InputError("frame0 and frame1 have different channel counts");
  }

  Interpolation out;
  out.flow0t = intermediate_flow(in.flow01, in.sigma01, t, config);
  out.flow1t = backward_intermediate_flow(in.flow10, in.sigma10, t, config);

  const std::array<Image, 2> side0{sigma_to_image(in.sigma01), in.frame0};
  const std::array<Image, 2> side1{sigma_to_image(in.sigma10), in.frame1};
  WarpedBundle warped0 = warp_bundle(side0, out.flow0t);
  WarpedBundle warped1 = warp_bundle(side1, out.flow1t);

  out.warped_sigma01 = std::move(warped0.maps[0]);
  out.warped_sigma10 = std::move(warped1.maps[0]);
  out.warped0 = {std::move(warped0.maps[1]), std::move(warped0.mask)};
  out.warped1 = {std::move(warped1.maps[1]), std::move(warped1.mask)};
  out.frame = blend(out.warped0, out.warped1, in.frame0, in.frame1, t);
  return out;
}

}  // namespace arcinterp
