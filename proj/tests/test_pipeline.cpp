#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "arcinterp/metrics.hpp"
#include "arcinterp/pipeline.hpp"
#include "arcinterp/scene.hpp"
#include "oracles.hpp"

using namespace arcinterp;

TEST_CASE("identical frames with zero motion interpolate to themselves") {
  std::mt19937_64 rng(1);
  const Extent e{20, 15};
  const Image frame = oracle::random_image(rng, e, 3);
  const FlowField zero(e);
  const SigmaMap flat(e);
  for (double t : {0.0, 0.3, 0.5, 1.0}) {
    const Interpolation r = interpolate({frame, frame, zero, zero, flat, flat}, t);
    for (std::size_t i = 0; i < frame.samples().size(); ++i) {
      CHECK(r.frame.samples()[i] == doctest::Approx(frame.samples()[i]).epsilon(1e-7));
    }
  }
}

TEST_CASE("rotation scene: arc trajectories beat straight lines") {
  SceneSpec spec;
  spec.extent = {64, 64};
  spec.motion = Rotation{{32.0, 32.0}, std::numbers::pi / 3};
  spec.object_radius = 28.0;
  const GroundTruthFields gt = ground_truth_fields(spec);
  const Image f0 = ground_truth_frame(spec, 0.0);
  const Image f1 = ground_truth_frame(spec, 1.0);
  const Image truth = ground_truth_frame(spec, 0.5);
  const FramePair pair{f0, f1, gt.flow01, gt.flow10, gt.sigma01, gt.sigma10};

  const Interpolation arc = interpolate(pair, 0.5);
  ArcConfig linear;
  linear.force_linear = true;
  const Interpolation straight = interpolate(pair, 0.5, linear);
  CHECK(psnr(arc.frame, truth) > psnr(straight.frame, truth) + 0.5);

  // Warped sigma keeps its constant value wherever the splat landed.
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 64; ++x) {
      if (arc.warped0.mask.at(x, y)) {
        CHECK(arc.warped_sigma01.at(x, y, 0) ==
              doctest::Approx(gt.sigma01.at(0, 0)).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("interpolate checks dimensions") {
  const Extent e{8, 8};
  const Image a(e, 3);
  const FlowField f(e);
  const SigmaMap s(e);
  const SigmaMap wrong({8, 7});
  CHECK_THROWS(interpolate({a, a, f, f, s, wrong}, 0.5));
  const Image gray(e, 1);
  CHECK_THROWS(interpolate({a, gray, f, f, s, s}, 0.5));
}
