#pragma once

#include "arcinterp/types.hpp"
#include "arcinterp/warp.hpp"

namespace arcinterp {

/// Time-weighted blend of the two warped frames.
///
/// Where both warps are valid the result is (1-t) w0 + t w1; where only one is
/// valid, that sample; where neither is, the cross-fade of the unwarped inputs
/// (1-t) frame0 + t frame1.
Image blend(const WarpedImage& warp0, const WarpedImage& warp1, const Image& frame0,
            const Image& frame1, double t);

}  // namespace arcinterp
