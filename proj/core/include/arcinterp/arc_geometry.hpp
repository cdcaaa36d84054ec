#pragma once

#include "arcinterp/types.hpp"

namespace arcinterp {

/// Circular arc joining a pixel's position in frame 0 to its position in
/// frame 1, traversed at constant speed.
///
/// Angles are polar angles about the arc center in image coordinates
/// (x right, y down). With y pointing down, sigma > 0 makes rightward motion
/// bulge toward +y, which appears counter-clockwise on screen.
struct ArcParams {
  double chord_length = 0.0;  ///< d = |(u, v)|, pixels
  double dip_angle = 0.0;     ///< alpha = atan2(v, u)
  double half_angle = 0.0;    ///< beta = asin(sigma), in [-pi/2, pi/2]
  double radius = 0.0;        ///< signed R = d / (2 sigma), pixels
  double start_angle = 0.0;   ///< theta_0 = alpha + pi/2 + beta
  double end_angle = 0.0;     ///< theta_1 = alpha + pi/2 - beta
};

struct ArcConfig {
  /// |sigma| at or below this uses the straight-line trajectory.
  double sigma_threshold = 0.01;
  /// Ablation switch: every pixel takes the straight-line trajectory.
  bool force_linear = false;

  /// Throws InputError unless 0 < sigma_threshold < 1.
  void validate() const;
};

/// Arc parameters from flow (u, v) and curvature measure sigma.
///
/// Requires finite inputs, 0 < |sigma| <= 1. Throws NumericError otherwise;
/// the straight-line case (sigma == 0) belongs to the caller.
ArcParams arc_params(double u, double v, double sigma);

/// Displacement from the arc start to the point reached at time t in [0, 1].
/// Exactly (0, 0) at t == 0; (u, v) up to rounding at t == 1.
Vec2 evaluate_arc_flow(const ArcParams& params, double t);

/// Single-pixel intermediate displacement with the threshold case split: arc
/// when |sigma| > sigma_threshold, otherwise t * (u, v).
Vec2 trajectory_displacement(Vec2 flow, double sigma, double t, const ArcConfig& config);

/// Displacement field F_{0->t} from frame-0 pixels to their positions at
/// time t. Throws InputError on dimension mismatch or t outside [0, 1],
/// NumericError on non-finite flow.
FlowField intermediate_flow(const FlowField& flow, const SigmaMap& sigma, double t,
                            const ArcConfig& config = {});

/// F_{1->t}: the backward arc built from (flow10, sigma10) evaluated at 1 - t.
FlowField backward_intermediate_flow(const FlowField& flow10, const SigmaMap& sigma10, double t,
                                     const ArcConfig& config = {});

}  // namespace arcinterp
