#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mgh/blackhole.hpp"
#include "mgh/curvature.hpp"
#include "mgh/earthquake.hpp"
#include "support.hpp"

using namespace mgh;
using mgh::testing::Gen;

namespace {

RMat diag_len(double l) { return {std::exp(l / 2), 0, 0, std::exp(-l / 2)}; }

AdSHolonomy fuchsian(const Holonomy& h) { return {h, h, 0, true}; }

Rectangle manual_rectangle(double shift) {
  Rectangle r;
  r.left = {false, -1 + shift, 1 + shift};
  r.right = {false, 2 + shift, 3 + shift};
  r.degenerate = false;
  r.horizon = {{{-1 + shift, 2 + shift}, {1 + shift, 3 + shift}}};
  return r;
}

}  // namespace

TEST_CASE("horizon size and momentum") {
  HorizonData h = horizon_invariants(diag_len(2), diag_len(1));
  CHECK(h.size == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(h.momentum == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(horizon_invariants(diag_len(1.3), diag_len(1.3)).momentum == 0.0);
  CHECK_THROWS_AS(horizon_invariants(RMat{1, 1, 0, 1}, diag_len(1)), Error);

  Gen g(21);
  for (int i = 0; i < 100; ++i) {
    RMat a = g.hyperbolic(), b = g.hyperbolic();
    HorizonData x = horizon_invariants(a, b), y = horizon_invariants(b, a);
    CHECK(x.size == doctest::Approx(y.size).epsilon(1e-14));
    CHECK(x.momentum == doctest::Approx(-y.momentum).epsilon(1e-14));
    CHECK(x.size > std::abs(x.momentum));
  }
}

TEST_CASE("circle arcs wrap through infinity") {
  CircleArc a{false, 1.0, -1.0};  // counterclockwise through infinity
  CHECK(a.contains(5.0));
  CHECK(a.contains(kInf));
  CHECK(a.contains(-7.0));
  CHECK_FALSE(a.contains(0.0));
  CircleArc b{false, -1.0, 1.0};
  CHECK(b.contains(0.0));
  CHECK_FALSE(b.contains(kInf));
  CHECK(circle_angle(kInf) == doctest::Approx(kPi));
  CHECK(circle_angle(-1e300) == doctest::Approx(kPi));
}

TEST_CASE("rectangles of a torus with a geodesic boundary") {
  PantDecomposition pd = PantDecomposition::once_punctured_torus();
  Holonomy h = holonomy_from_fn(pd, FNPoint{{1.4}, {1.2}, {0.3}});
  auto rects = peripheral_rectangles(fuchsian(h));
  REQUIRE(rects.size() == 1);
  const Rectangle& r = rects[0];
  CHECK_FALSE(r.degenerate);
  CHECK(r.depth == kOrbitDepth);
  // The chosen side misses the limit set sample; the other one does not.
  auto sample = limit_set_sample(h, 8);
  int inside = 0;
  for (double x : sample) inside += r.left.contains(x, 1e-9);
  CHECK(inside == 0);
  CircleArc other{false, r.left.to, r.left.from};
  int outside = 0;
  for (double x : sample) outside += other.contains(x, 1e-9);
  CHECK(outside > 0);
  // Invariance: the peripheral element maps the side into itself.
  RMat c = h.eval(h.peripheral[0]);
  Gen g(22);
  for (int i = 0; i < 20; ++i) {
    double lo = circle_angle(r.left.from);
    double span = circle_angle(r.left.to) - lo;
    if (span < 0) span += 2 * kPi;
    double th = lo + g.uniform(0.05, 0.95) * span;
    double x = std::tan(th / 2);
    CHECK(r.left.contains(mobius_boundary(c, x)));
    CHECK(r.left.contains(mobius_boundary(c.inverse(), x)));
  }
  // Horizon vertices are the fixed points.
  for (const auto& v : r.horizon) {
    double p = v[0];
    double q = mobius_boundary(c, p);
    double d = std::abs(circle_angle(q) - circle_angle(p));
    CHECK(std::min(d, 2 * kPi - d) < 1e-9);
  }
}

TEST_CASE("cusped rectangles are degenerate") {
  PantDecomposition pd = PantDecomposition::once_punctured_torus();
  Holonomy h = holonomy_from_fn(pd, FNPoint{{0.0}, {1.2}, {0.3}});
  auto rects = peripheral_rectangles(fuchsian(h), 6);
  REQUIRE(rects.size() == 1);
  CHECK(rects[0].degenerate);
  CHECK(rects[0].left.point);
  CHECK(rects[0].right.point);
  CHECK(globally_hyperbolic(rects));
  CHECK(extremal_meridians(rects).size() == 1);
}

TEST_CASE("three-holed sphere: sides are stable in depth") {
  PantDecomposition pd = PantDecomposition::three_punctured_sphere();
  Holonomy h = holonomy_from_fn(pd, FNPoint{{1.0, 1.5, 2.0}, {}, {}});
  auto rects = peripheral_rectangles(fuchsian(h), 8);
  auto coarse = peripheral_rectangles(fuchsian(h), 3);
  CHECK(rects.size() == 3);
  for (std::size_t i = 0; i < rects.size(); ++i) {
    CHECK_FALSE(rects[i].degenerate);
    CHECK(rects[i].left.from == coarse[i].left.from);
    CHECK(rects[i].right.to == coarse[i].right.to);
  }
  CHECK(extremal_meridians(rects).size() == 8);
}

TEST_CASE("a side with samples on both arcs is ambiguous") {
  RMat g = diag_len(1.0);  // fixed points 0 and infinity
  std::vector<double> both{1.0, -1.0};
  bool ambiguous = false;
  try {
    peripheral_rectangle(g, g, both, both, 1);
  } catch (const Error& e) {
    ambiguous = e.code() == ErrorCode::AmbiguousSide;
  }
  CHECK(ambiguous);
  Rectangle r = peripheral_rectangle(g, g, {1.0, 2.0}, {-1.0}, 1);
  CHECK(r.left.contains(-3.0));
  CHECK(r.right.contains(3.0));
}

TEST_CASE("extremal meridians") {
  for (int k = 0; k <= 3; ++k) {
    std::vector<Rectangle> rects;
    for (int i = 0; i < k; ++i) rects.push_back(manual_rectangle(10.0 * i));
    rects.push_back(Rectangle{});  // degenerate ones do not count
    auto ms = extremal_meridians(rects);
    CHECK(ms.size() == (1u << k));
    int lower = 0, upper = 0;
    for (const auto& m : ms) {
      lower += m.all_lower();
      upper += m.all_upper();
    }
    CHECK(lower == 1);
    CHECK(upper == 1);
    CHECK(globally_hyperbolic(rects) == (k == 0));
  }
  // Time reversal exchanges the all-lower and all-upper arcs.
  std::vector<Rectangle> rects{manual_rectangle(0), manual_rectangle(7)};
  std::vector<Rectangle> swapped;
  for (const auto& r : rects) swapped.push_back(t_symmetry(r));
  auto ms = extremal_meridians(rects), mt = extremal_meridians(swapped);
  const MeridianChoice* lo = nullptr;
  const MeridianChoice* up = nullptr;
  for (const auto& m : ms)
    if (m.all_lower()) lo = &m;
  for (const auto& m : mt)
    if (m.all_upper()) up = &m;
  REQUIRE(lo);
  REQUIRE(up);
  for (std::size_t i = 0; i < rects.size(); ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(lo->arcs[i][j][0] == up->arcs[i][j][1]);
      CHECK(lo->arcs[i][j][1] == up->arcs[i][j][0]);
    }
}

TEST_CASE("omega membership") {
  PantDecomposition pd = PantDecomposition::once_punctured_torus();
  Holonomy h = holonomy_from_fn(pd, FNPoint{{0.0}, {1.2}, {0.3}});
  AdSHolonomy f = fuchsian(h);
  // Points of the invariant plane are in Omega.
  Gen g(23);
  for (int i = 0; i < 10; ++i) {
    RMat x = point_matrix(g.point());
    for (int d = 1; d <= 6; ++d) CHECK(omega_contains(x, f, d).inside);
  }
  // The identity is fixed by a Fuchsian group.
  CHECK_FALSE(omega_contains(RMat::identity(), f, 1).inside);
  // A point of the dual line of a generator axis is timelike related to one
  // of its translates.
  DualGeodesic dl = dual_geodesic(axis(h.gens[0]));
  RMat x = dl.point(0.3);
  CHECK_FALSE(omega_contains(x, f, 3).inside);
  CHECK_FALSE(omega_contains(f.eval({letter(1)}).apply(x), f, 3).inside);
  CHECK_THROWS_AS(omega_contains(x, f, 0), Error);
}

TEST_CASE("bent surfaces lie in Omega") {
  PantDecomposition pd = PantDecomposition::once_punctured_torus();
  Holonomy h = holonomy_from_fn(pd, FNPoint{{0.0}, {1.3}, {0.2}});
  Lamination lam = Lamination::multicurve(pd, {0.6});
  AdSHolonomy ah = ads_holonomy(h, lam);
  REQUIRE(ah.converged);
  BendContext ctx(lam, h, h.base_point, 3.0);
  Gen g(24);
  for (int i = 0; i < 12; ++i) {
    cplx z = h.base_point + cplx(g.uniform(-0.6, 0.6), g.uniform(-0.3, 0.3)) * h.base_point.imag();
    RMat x = bend_map_ads(ctx, z);
    for (int d : {1, 3, 5}) {
      CHECK(omega_contains(x, ah, d).inside);
      CHECK(omega_contains(ah.eval({letter(0)}).apply(x), ah, d).inside);
    }
  }
}

TEST_CASE("horizon data from a spiraling earthquake") {
  // Shear torus with a lamination spiraling into the boundary.
  ShearPoint F{Triangulation::once_punctured_torus(), {0.9, -0.3, 0.6}};
  Holonomy h = holonomy_from_shear(F);
  double l = std::abs(F.star_sum(0));
  Lamination lam = Lamination::triangulation(F.tri, {0.1, 0.05, 0.08});
  double I = measure_spectrum_peripheral(lam)[0];
  REQUIRE(I < l);
  AdSHolonomy ah = ads_holonomy(h, lam);
  const Word& c = h.peripheral[0];
  HorizonData hd = horizon_invariants(ah.left.eval(c), ah.right.eval(c));
  CHECK(hd.size == doctest::Approx(l).epsilon(1e-6));
  CHECK(std::abs(hd.momentum) == doctest::Approx(I).epsilon(1e-6));
  // Coordinates of the two earthquakes agree with the holonomy lengths.
  double lL = std::abs(quake_shear(F, lam, QuakeSide::left).star_sum(0));
  double lR = std::abs(quake_shear(F, lam, QuakeSide::right).star_sum(0));
  CHECK((lL + lR) / 2 == doctest::Approx(hd.size).epsilon(1e-6));
  CHECK((lL - lR) / 2 == doctest::Approx(hd.momentum).epsilon(1e-6));
}

TEST_CASE("BTZ parameters and metric") {
  BTZParams p = btz_params(1, 0);
  CHECK(p.M == 1.0);
  CHECK(p.J == 0.0);
  CHECK_THROWS_AS(btz_params(1, 1), Error);
  CHECK_THROWS_AS(btz_params(0.5, 1), Error);
  CHECK_THROWS_AS(btz_params(1, -0.1), Error);

  Gen g(25);
  for (int i = 0; i < 100; ++i) {
    double rm = g.uniform(0.01, 2), rp = rm + g.uniform(0.01, 2);
    BTZParams q = btz_params(rp, rm);
    double s = rp + rm, m = rp - rm;
    CHECK(std::abs(q.M + q.J - s * s) < 1e-12 * s * s);
    CHECK(std::abs(q.M - q.J - m * m) < 1e-12 * std::max(1.0, q.M));
    CHECK(q.M >= q.J);
    CHECK(std::abs(q.f(rp)) < 1e-12 * std::max(1.0, q.M));
    CHECK(std::abs(q.f(rm)) < 1e-12 * std::max(1.0, q.M));
    BTZParams r = btz_from_horizon(btz_horizon(q));
    CHECK(r.r_plus == doctest::Approx(rp).epsilon(1e-14));
    CHECK(r.r_minus == doctest::Approx(rm).epsilon(1e-14));
  }
  BTZParams neg = btz_from_horizon({1.5, -0.5});
  CHECK(neg.r_plus == doctest::Approx(1.0));
  CHECK(neg.r_minus == doctest::Approx(0.5));
  CHECK(btz_horizon(neg).momentum == doctest::Approx(-0.5));

  // Static case.
  Mat3 G = btz_metric(0, 3, 0, p);
  CHECK(G(0, 0) == doctest::Approx(1 - 9.0));
  CHECK(G(1, 1) == doctest::Approx(1 / (9.0 - 1)));
  CHECK(G(2, 2) == doctest::Approx(9.0));
  CHECK(G(0, 2) == 0.0);

  bool named = false;
  try {
    btz_metric(0, 1.0, 0, p);
  } catch (const Error& e) {
    named = e.code() == ErrorCode::CoordinateSingularity &&
            std::string(e.what()).find("r+") != std::string::npos;
  }
  CHECK(named);

  BTZParams q = btz_params(1.3, 0.6);
  MetricFunction metric = [&](const Eigen::VectorXd& x) {
    return Eigen::MatrixXd(btz_metric(x[0], x[1], x[2], q));
  };
  for (double r : {2 * q.r_plus, 0.9 * q.r_minus + 0.1 * q.r_plus, 0.4 * q.r_minus}) {
    Eigen::VectorXd x(3);
    x << 0.2, r, 0.7;
    CHECK(constant_curvature_residual(metric, x, -1.0) < 1e-4);
  }
}
