#pragma once

#include "arcinterp/arc_geometry.hpp"
#include "arcinterp/types.hpp"
#include "arcinterp/warp.hpp"

namespace arcinterp {

struct FramePair {
  const Image& frame0;
  const Image& frame1;
  const FlowField& flow01;
  const FlowField& flow10;
  const SigmaMap& sigma01;
  const SigmaMap& sigma10;
};

struct Interpolation {
  Image frame;
  FlowField flow0t;
  FlowField flow1t;
  WarpedImage warped0;
  WarpedImage warped1;
  Image warped_sigma01;
  Image warped_sigma10;
};

/// Full interpolation at time t: intermediate flows in both directions, one
/// bundle splat per side of [sigma, frame], then blend.
Interpolation interpolate(const FramePair& inputs, double t, const ArcConfig& config = {});

}  // namespace arcinterp
