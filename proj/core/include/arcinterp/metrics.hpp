#pragma once

#include "arcinterp/types.hpp"

namespace arcinterp {

inline constexpr double kCharbonnierEpsilon = 0.001;

/// Peak 1.0; +infinity when the images are identical.
double psnr(const Image& a, const Image& b);

/// Mean SSIM over the valid region of an 11x11 Gaussian window (std 1.5),
/// K1 = 0.01, K2 = 0.03, dynamic range 1. Both sides must be at least 11 px.
double ssim(const Image& a, const Image& b);

/// RMS difference in 8-bit units.
double interpolation_error(const Image& a, const Image& b);

/// Mean of sqrt(x^2 + eps^2) over all sample differences.
double charbonnier(const Image& a, const Image& b, double epsilon = kCharbonnierEpsilon);

}  // namespace arcinterp
