#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "arcinterp/arc_geometry.hpp"
#include "arcinterp/errors.hpp"
#include "oracles.hpp"

using namespace arcinterp;
using std::numbers::pi;

namespace {

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

TEST_CASE("arc_params substitutes the chord, dip and half angle") {
  SUBCASE("rightward chord, sigma = sin(pi/4)") {
    const ArcParams p = arc_params(1.0, 0.0, std::sin(pi / 4));
    CHECK(p.chord_length == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.dip_angle == 0.0);
    CHECK(p.half_angle == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(p.radius == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(p.start_angle == doctest::Approx(3 * pi / 4).epsilon(1e-15));
    CHECK(p.end_angle == doctest::Approx(pi / 4).epsilon(1e-15));
  }
  SUBCASE("downward chord, sigma = 0.5") {
    const ArcParams p = arc_params(0.0, 2.0, 0.5);
    CHECK(p.chord_length == 2.0);
    CHECK(p.dip_angle == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(p.half_angle == doctest::Approx(pi / 6).epsilon(1e-15));
    CHECK(p.radius == 2.0);
    CHECK(p.start_angle == doctest::Approx(pi + pi / 6).epsilon(1e-15));
    CHECK(p.end_angle == doctest::Approx(pi - pi / 6).epsilon(1e-15));
  }
  SUBCASE("3-4-5 chord, negative sigma (40-digit reference values)") {
    const ArcParams p = arc_params(3.0, 4.0, -0.6);
    CHECK(p.chord_length == 5.0);
    CHECK(p.dip_angle == doctest::Approx(0.9272952180016122324).epsilon(1e-14));
    CHECK(p.half_angle == doctest::Approx(-0.6435011087932843868).epsilon(1e-14));
    CHECK(p.radius == doctest::Approx(-4.1666666666666666667).epsilon(1e-14));
    CHECK(p.start_angle == doctest::Approx(1.8545904360032244649).epsilon(1e-14));
    CHECK(p.end_angle == doctest::Approx(3.1415926535897932385).epsilon(1e-14));
  }
}

TEST_CASE("arc_params invariants hold on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> flow(-200.0, 200.0);
  std::uniform_real_distribution<double> sig(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double u = flow(rng), v = flow(rng);
    double s = sig(rng);
    if (s == 0.0) continue;
    const ArcParams p = arc_params(u, v, s);
    CHECK(std::abs(std::sin(p.half_angle) - s) <= 1e-12);
    CHECK(std::abs(p.radius) >= p.chord_length / 2 * (1 - 1e-15));
    CHECK(p.start_angle - p.end_angle == doctest::Approx(2 * p.half_angle));
  }
}

TEST_CASE("arc_params rejects its domain violations") {
  CHECK_THROWS_AS(arc_params(1.0, 0.0, 1.0000001), NumericError);
  CHECK_THROWS_AS(arc_params(1.0, 0.0, -1.5), NumericError);
  CHECK_THROWS_AS(arc_params(1.0, 0.0, 0.0), NumericError);
  CHECK_THROWS_AS(arc_params(std::nan(""), 0.0, 0.5), NumericError);
  CHECK_THROWS_AS(arc_params(1.0, INFINITY, 0.5), NumericError);
  CHECK_NOTHROW(arc_params(1.0, 0.0, 1.0));
  CHECK_NOTHROW(arc_params(1.0, 0.0, -1.0));
}

TEST_CASE("evaluate_arc_flow endpoints") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> flow(-100.0, 100.0);
  std::uniform_real_distribution<double> mag(0.01, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double u = flow(rng), v = flow(rng);
    const double s = (i % 2 ? 1.0 : -1.0) * mag(rng);
    const ArcParams p = arc_params(u, v, s);
    const Vec2 start = evaluate_arc_flow(p, 0.0);
    CHECK(start.x == 0.0);
    CHECK(start.y == 0.0);
    const Vec2 end = evaluate_arc_flow(p, 1.0);
    CHECK(distance(end, {u, v}) <= 1e-9 * std::max(1.0, p.chord_length));
  }
}

TEST_CASE("evaluate_arc_flow on a quarter turn about the origin") {
  // (1,0) -> (0,1) by +90 degrees; the circle centered at the origin is the
  // arc with sigma = -sin(45 deg) in image coordinates.
  const ArcParams p = arc_params(-1.0, 1.0, -std::sin(pi / 4));
  const Vec2 mid = evaluate_arc_flow(p, 0.5);
  CHECK(mid.x == doctest::Approx(-0.29289321881345247560).epsilon(1e-12));
  CHECK(mid.y == doctest::Approx(0.70710678118654752440).epsilon(1e-12));

  // The opposite sign bends the other way: the circle centered at (1, 1).
  const Vec2 other = evaluate_arc_flow(arc_params(-1.0, 1.0, std::sin(pi / 4)), 0.5);
  CHECK(other.x == doctest::Approx(-0.70710678118654752440).epsilon(1e-12));
  CHECK(other.y == doctest::Approx(0.29289321881345247560).epsilon(1e-12));
}

TEST_CASE("evaluate_arc_flow agrees with the literal cosine form and rigid rotation") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> flow(-50.0, 50.0);
  std::uniform_real_distribution<double> sig(-1.0, 1.0);
  std::uniform_real_distribution<double> time(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double u = flow(rng), v = flow(rng), t = time(rng);
    const double s = sig(rng);
    if (std::abs(s) < 0.01) continue;
    const Vec2 got = evaluate_arc_flow(arc_params(u, v, s), t);
    CHECK(distance(got, oracle::literal_arc(u, v, s, t)) <= 1e-9);
    CHECK(distance(got, oracle::rotation_path(u, v, -2.0 * std::asin(s), t)) <= 1e-9);
  }
}

TEST_CASE("negating sigma mirrors the trajectory across the chord") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> flow(-30.0, 30.0);
  std::uniform_real_distribution<double> mag(0.02, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double u = flow(rng), v = flow(rng), s = mag(rng);
    const double d = std::hypot(u, v);
    const Vec2 e{u / d, v / d};
    const ArcParams pos = arc_params(u, v, s);
    const ArcParams neg = arc_params(u, v, -s);
    for (double t = 0.0; t <= 1.0; t += 0.125) {
      const Vec2 a = evaluate_arc_flow(pos, t);
      const Vec2 b = evaluate_arc_flow(neg, t);
      const double along = a.x * e.x + a.y * e.y;
      const Vec2 reflected{2 * along * e.x - a.x, 2 * along * e.y - a.y};
      CHECK(distance(reflected, b) <= 1e-9 * std::max(1.0, d));
    }
  }
}

TEST_CASE("the arc is traversed at constant speed") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> flow(-80.0, 80.0);
  std::uniform_real_distribution<double> sig(0.05, 1.0);
  for (int i = 0; i < 200; ++i) {
    const ArcParams p = arc_params(flow(rng), flow(rng), (i % 2 ? -1 : 1) * sig(rng));
    constexpr int kSteps = 16;
    const Vec2 first = evaluate_arc_flow(p, 1.0 / kSteps);
    const double step = std::hypot(first.x, first.y);
    Vec2 prev{0.0, 0.0};
    for (int k = 1; k <= kSteps; ++k) {
      const Vec2 cur = evaluate_arc_flow(p, static_cast<double>(k) / kSteps);
      CHECK(std::abs(distance(cur, prev) - step) <= 1e-9 * step);
      prev = cur;
    }
  }
}

TEST_CASE("arc and straight line agree as sigma vanishes") {
  for (double d : {1.0, 10.0, 100.0}) {
    for (double angle : {0.0, 1.0, -2.5}) {
      const double u = d * std::cos(angle), v = d * std::sin(angle);
      const ArcParams p = arc_params(u, v, 1e-6);
      for (double t = 0.0; t <= 1.0; t += 0.1) {
        const Vec2 arc = evaluate_arc_flow(p, t);
        CHECK(distance(arc, {t * u, t * v}) <= 1e-4 * d);
      }
    }
  }
}

TEST_CASE("branch gap at the threshold is bounded by the sagitta") {
  const ArcConfig cfg;
  for (double d : {1.0, 10.0, 100.0}) {
    const Vec2 f{d, 0.0};
    double worst = 0.0;
    for (int k = 0; k <= 100; ++k) {
      const double t = k / 100.0;
      const Vec2 above = trajectory_displacement(f, std::nextafter(0.01, 1.0), t, cfg);
      const Vec2 below = trajectory_displacement(f, 0.01, t, cfg);
      CHECK(below.x == t * d);
      CHECK(below.y == 0.0);
      const double gap = distance(above, below);
      CHECK(gap <= d * 0.01 / 2);
      worst = std::max(worst, gap);
    }
    // t = 0.5 gap is the sagitta R (1 - cos beta) = d sigma / 4 + O(sigma^3).
    const Vec2 mid = trajectory_displacement(f, std::nextafter(0.01, 1.0), 0.5, cfg);
    CHECK(distance(mid, {d / 2, 0.0}) == doctest::Approx(0.002500062503125195 * d).epsilon(1e-9));
    CHECK(worst <= d * 0.01 / 4 * (1 + 1e-3));
  }
}

TEST_CASE("threshold comparison is strict") {
  const ArcConfig cfg;
  const Vec2 f{40.0, -10.0};
  const Vec2 at = trajectory_displacement(f, -0.01, 0.3, cfg);
  CHECK(at.x == 0.3 * 40.0);
  CHECK(at.y == 0.3 * -10.0);
  const Vec2 beyond = trajectory_displacement(f, -0.0100001, 0.3, cfg);
  CHECK(beyond != at);
}

TEST_CASE("ArcConfig validation") {
  CHECK_NOTHROW(ArcConfig{}.validate());
  CHECK_THROWS_AS((ArcConfig{0.0, false}).validate(), InputError);
  CHECK_THROWS_AS((ArcConfig{1.0, false}).validate(), InputError);
  CHECK_THROWS_AS((ArcConfig{-0.1, false}).validate(), InputError);
}

TEST_CASE("intermediate_flow") {
  const Extent e{7, 5};
  SUBCASE("zero flow stays zero") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> sig(-1.0, 1.0);
    std::vector<double> s(e.pixels());
    for (double& x : s) x = sig(rng);
    const SigmaMap sigma = SigmaMap::from_values(e, s);
    for (double t : {0.0, 0.3, 1.0}) {
      const FlowField out = intermediate_flow(FlowField(e), sigma, t);
      CHECK(out == FlowField(e));
    }
  }
  SUBCASE("sigma == 0 scales the flow linearly") {
    const FlowField out = intermediate_flow(FlowField::uniform(e, {8, -4}), SigmaMap(e), 0.25);
    CHECK(out == FlowField::uniform(e, {2, -1}));
  }
  SUBCASE("threshold continuity for a 100 px flow at t = 0.5") {
    const FlowField flow = FlowField::uniform(e, {100, 0});
    const FlowField above = intermediate_flow(flow, SigmaMap(e, 0.0100001), 0.5);
    const FlowField below = intermediate_flow(flow, SigmaMap(e, 0.0099999), 0.5);
    CHECK(distance(above.at(3, 2), below.at(3, 2)) <= 0.25 + 1e-5);
  }
  SUBCASE("arc branch matches the per-pixel evaluation") {
    const FlowField flow = FlowField::uniform(e, {-1, 1});
    const FlowField out = intermediate_flow(flow, SigmaMap(e, -std::sin(pi / 4)), 0.5);
    CHECK(out.at(0, 0).x == doctest::Approx(-0.2928932188134525).epsilon(1e-12));
    CHECK(out.at(6, 4).y == doctest::Approx(0.7071067811865476).epsilon(1e-12));
  }
  SUBCASE("force_linear ignores sigma") {
    ArcConfig cfg;
    cfg.force_linear = true;
    const FlowField out =
        intermediate_flow(FlowField::uniform(e, {10, 0}), SigmaMap(e, 0.9), 0.5, cfg);
    CHECK(out == FlowField::uniform(e, {5, 0}));
  }
  SUBCASE("t == 1 returns the flow exactly on both branches") {
    std::mt19937_64 rng(4);
    const FlowField flow = oracle::random_flow(rng, e, 20);
    CHECK(intermediate_flow(flow, SigmaMap(e, 0.7), 1.0) == flow);
    CHECK(intermediate_flow(flow, SigmaMap(e, 0.0), 1.0) == flow);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(intermediate_flow(FlowField(e), SigmaMap({7, 4}), 0.5), InputError);
    CHECK_THROWS_AS(intermediate_flow(FlowField(e), SigmaMap(e), 1.5), InputError);
    CHECK_THROWS_AS(intermediate_flow(FlowField(e), SigmaMap(e), -0.1), InputError);
    FlowField bad(e);
    bad.set(2, 2, {std::nan(""), 0});
    CHECK_THROWS_AS(intermediate_flow(bad, SigmaMap(e), 0.5), NumericError);
  }
}

TEST_CASE("backward_intermediate_flow") {
  const Extent e{4, 3};
  std::mt19937_64 rng(6);
  const FlowField flow10 = oracle::random_flow(rng, e, 15);
  const SigmaMap sigma10(e, 0.4);
  CHECK(backward_intermediate_flow(flow10, sigma10, 1.0) == FlowField(e));
  CHECK(backward_intermediate_flow(flow10, sigma10, 0.0) == flow10);

  // A point and its correspondent meet at the same arc position.
  const double omega = 1.2;
  const Vec2 p0{0.0, 0.0};
  const Vec2 p1 = oracle::rotation_path(5.0, -3.0, omega, 1.0);
  for (double t : {0.1, 0.5, 0.8}) {
    const Vec2 fwd = trajectory_displacement({p1.x - p0.x, p1.y - p0.y}, -std::sin(omega / 2), t,
                                             ArcConfig{});
    const FlowField back = backward_intermediate_flow(
        FlowField::uniform({1, 1}, {p0.x - p1.x, p0.y - p1.y}), SigmaMap({1, 1}, std::sin(omega / 2)),
        t);
    const Vec2 via_back{p1.x + back.at(0, 0).x, p1.y + back.at(0, 0).y};
    CHECK(distance({p0.x + fwd.x, p0.y + fwd.y}, via_back) <= 1e-9);
    CHECK(distance(via_back, oracle::rotation_path(5.0, -3.0, omega, t)) <= 1e-9);
  }
}
