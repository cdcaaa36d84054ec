#pragma once

#include <span>
#include <vector>

#include "arcinterp/types.hpp"

namespace arcinterp {

/// Target pixels whose accumulated weight is at or below this are holes.
inline constexpr double kHoleWeight = 1e-7;

/// Raw forward-splat accumulators.
struct SplatResult {
  Extent extent;
  int channels = 0;
  std::vector<double> values;   // H x W x C, weighted sample sums
  std::vector<double> weights;  // H x W, bilinear weight sums
  Mask mask;                    // weight > kHoleWeight
};

struct WarpedImage {
  Image image;
  Mask mask;
};

struct WarpedBundle {
  std::vector<Image> maps;
  Mask mask;
};

/// Scatters every source pixel p to p + flow(p), distributing its samples over
/// the four integer neighbours with bilinear weights. Neighbours outside the
/// frame are dropped.
SplatResult splat_sum(const Image& source, const FlowField& flow);

/// Average splatting: accumulated values divided by accumulated weight. Holes
/// are 0 with mask false.
WarpedImage splat_average(const Image& source, const FlowField& flow);

/// Warps several maps with one splat so they share weights and mask.
WarpedBundle warp_bundle(std::span<const Image> maps, const FlowField& flow);

}  // namespace arcinterp
