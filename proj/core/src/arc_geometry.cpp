#include "arcinterp/arc_geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "arcinterp/errors.hpp"

namespace arcinterp {

namespace {

void require_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InputError("time t = " + std::to_string(t) + " outside [0, 1]");
  }
}

}  // namespace

void ArcConfig::validate() const {
  if (!(sigma_threshold > 0.0 && sigma_threshold < 1.0)) {
    throw InputError("sigma threshold " + std::to_string(sigma_threshold) +
                     " outside (0, 1)");
  }
}

ArcParams arc_params(double u, double v, double sigma) {
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw NumericError("arc_params: non-finite flow");
  }
  if (!(std::abs(sigma) <= 1.0)) {
    throw NumericError("arc_params: sigma " + std::to_string(sigma) + " outside [-1, 1]");
  }
  if (sigma == 0.0) {
    throw NumericError("arc_params: sigma == 0 has no finite radius");
  }
  ArcParams p;
  p.chord_length = std::hypot(u, v);
  p.dip_angle = std::atan2(v, u);
  p.half_angle = std::asin(sigma);
  p.radius = p.chord_length / (2.0 * sigma);
  p.start_angle = p.dip_angle + std::numbers::pi / 2.0 + p.half_angle;
  p.end_angle = p.dip_angle + std::numbers::pi / 2.0 - p.half_angle;
  return p;
}

Vec2 evaluate_arc_flow(const ArcParams& params, double t) {
  // theta_t = theta_0 - 2 beta t. Sum-to-product on the endpoint differences:
  //   cos(theta_t) - cos(theta_0) =  2 sin(beta t) sin(theta_0 - beta t)
  //   sin(theta_t) - sin(theta_0) = -2 sin(beta t) cos(theta_0 - beta t)
  const double swept = params.half_angle * t;
  const double mid = params.start_angle - swept;
  const double scale = 2.0 * params.radius * std::sin(swept);
  return {scale * std::sin(mid), -scale * std::cos(mid)};
}

Vec2 trajectory_displacement(Vec2 flow, double sigma, double t, const ArcConfig& config) {
  if (config.force_linear || !(std::abs(sigma) > config.sigma_threshold)) {
    return {t * flow.x, t * flow.y};
  }
  if (t == 1.0) {
    return flow;  // the arc ends on the flow target by construction
  }
  return evaluate_arc_flow(arc_params(flow.x, flow.y, sigma), t);
}

FlowField intermediate_flow(const FlowField& flow, const SigmaMap& sigma, double t,
                            const ArcConfig& config) {
  config.validate();
  require_time(t);
  require_same_extent(flow.extent(), sigma.extent(), "intermediate_flow");
  flow.require_finite("intermediate_flow");

  FlowField out(flow.extent());
  const auto u = flow.u();
  const auto v = flow.v();
  const auto s = sigma.values();
  auto out_u = out.u();
  auto out_v = out.v();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Vec2 d = trajectory_displacement({u[i], v[i]}, s[i], t, config);
    out_u[i] = d.x;
    out_v[i] = d.y;
  }
  return out;
}

FlowField backward_intermediate_flow(const FlowField& flow10, const SigmaMap& sigma10, double t,
                                     const ArcConfig& config) {
  require_time(t);
  return intermediate_flow(flow10, sigma10, 1.0 - t, config);
}

}  // namespace arcinterp
