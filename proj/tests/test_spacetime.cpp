#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mgh/curvature.hpp"
#include "mgh/earthquake.hpp"
#include "mgh/spacetime.hpp"
#include "support.hpp"

using namespace mgh;
using mgh::testing::Gen;

namespace {

double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

// Literal-coordinate metric as a function for the curvature oracle, with the
// point ordered (T, zeta, u).
MetricFunction literal(double alpha0, std::function<Mat3(const LocalPoint&)> f) {
  return [alpha0, f](const Eigen::VectorXd& x) {
    return Eigen::MatrixXd(f(LocalPoint{x[0], x[2], x[1], alpha0}));
  };
}

Eigen::VectorXd coords(const LocalPoint& p) {
  Eigen::VectorXd x(3);
  x << p.T, p.zeta, p.u;
  return x;
}

// Random point at least `margin` away from both seams.
LocalPoint interior_point(Gen& g, double tlo, double thi, double alpha0, double margin = 0.01) {
  for (;;) {
    LocalPoint p{g.uniform(tlo, thi), g.uniform(-1, 1), g.uniform(-1.0, 1.5), alpha0};
    double s = alpha0 / p.T;
    if (std::abs(p.zeta) > margin && std::abs(p.zeta - s) > margin) return p;
  }
}

// Independent numerical pullback of the Minkowski form by flat_point.
Mat3 flat_pullback_oracle(const LocalPoint& p) {
  const double h = 1e-5;
  Eigen::Matrix3d J;
  for (int i = 0; i < 3; ++i) {
    LocalPoint a = p, b = p;
    double* fa = i == 0 ? &a.T : i == 1 ? &a.zeta : &a.u;
    double* fb = i == 0 ? &b.T : i == 1 ? &b.zeta : &b.u;
    *fa += h;
    *fb -= h;
    J.col(i) = (flat_point(a) - flat_point(b)) / (2 * h);
  }
  Mat3 G;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) G(i, j) = minkowski(J.col(i), J.col(j));
  return G;
}

}  // namespace

TEST_CASE("flat metric in the three regimes") {
  LocalPoint band{2.0, 0.3, 0.2, 1.0};
  CHECK(regime(band) == Regime::band);
  CHECK(max_abs(flat_metric(band) - Mat3(Eigen::Vector3d(-1, 4, 4).asDiagonal())) < 1e-15);

  LocalPoint neg{2.0, 0.3, -0.5, 1.0};
  double c = std::cosh(-0.5);
  CHECK(max_abs(flat_metric(neg) - Mat3(Eigen::Vector3d(-1, 4, 4 * c * c).asDiagonal())) <
        1e-14);

  LocalPoint beyond{2.0, 0.3, 0.9, 1.0};
  CHECK(regime(beyond) == Regime::beyond);
  c = std::cosh(0.9 - 0.5);
  CHECK(max_abs(flat_metric(beyond) - Mat3(Eigen::Vector3d(-1, 4, 4 * c * c).asDiagonal())) <
        1e-14);

  LocalPoint ray{2.0, 0.3, 5.0, kInf};
  CHECK(regime(ray) == Regime::band);
}

TEST_CASE("flat metric is the pullback of the Minkowski form") {
  Gen g(5);
  for (int i = 0; i < 60; ++i) {
    LocalPoint p = interior_point(g, 0.5, 3.0, 1.2, 1e-3);
    Mat3 G = flat_metric_literal(p);
    CHECK(max_abs(G - flat_pullback_oracle(p)) < 1e-7 * std::max(1.0, max_abs(G)));
    Mat3 A = flat_metric(p);
    CHECK(std::abs(A(0, 1)) + std::abs(A(0, 2)) + std::abs(A(1, 2)) < 1e-8);
  }
}

TEST_CASE("flat local model is flat and continuous across seams") {
  Gen g(6);
  for (int i = 0; i < 15; ++i) {
    LocalPoint p = interior_point(g, 0.7, 3.0, 1.0);
    CHECK(constant_curvature_residual(literal(1.0, flat_metric_literal), coords(p), 0.0) <
          1e-5);
  }
  for (double T : {0.5, 1.5, 4.0}) {
    CHECK(seam_c1_residual(LocalMap::flat, T, 0.2, 1.0, 0) < 1e-6);
    CHECK(seam_c1_residual(LocalMap::flat, T, 0.2, 1.0, 1) < 1e-6);
  }
}

TEST_CASE("Gauss map depends on the position and not on T") {
  Gen g(7);
  for (int i = 0; i < 30; ++i) {
    double u = g.uniform(-1, 1), z = g.uniform(-1.5, 1.5);
    LocalPoint a{g.uniform(0.2, 3), u, z, kInf}, b{g.uniform(0.2, 3), u, z, kInf};
    CHECK((gauss_map(a) - gauss_map(b)).norm() < 1e-14);
    CHECK(minkowski(gauss_map(a), gauss_map(a)) == doctest::Approx(-1.0).epsilon(1e-13));
    // Beyond the band the Gauss image is a function of (u, zeta').
    double zp = g.uniform(0.01, 1.0), alpha0 = 0.7;
    LocalPoint c{a.T, u, zp + alpha0 / a.T, alpha0}, d{b.T, u, zp + alpha0 / b.T, alpha0};
    CHECK((gauss_map(c) - gauss_map(d)).norm() < 1e-13);
    // The point is T N + (translation of its stratum).
    Vec3 off = flat_point(c) - c.T * gauss_map(c);
    CHECK((off - Vec3(0, 0, alpha0)).norm() < 1e-12);
  }
}

TEST_CASE("rescaling factors") {
  Gen g(8);
  for (int i = 0; i < 50; ++i) {
    double T = g.uniform(1.01, 5);
    auto [a, b] = rescaling_factors(Rescaling::wick, T);
    CHECK(a == doctest::Approx(1 / (T * T - 1)).epsilon(1e-15));
    CHECK(b == doctest::Approx(a * a).epsilon(1e-15));
    double s = g.uniform(0.01, 0.99);
    auto [c, d] = rescaling_factors(Rescaling::de_sitter, s);
    CHECK(c == doctest::Approx(1 / (1 - s * s)).epsilon(1e-15));
    CHECK(d == doctest::Approx(c * c).epsilon(1e-15));
    auto [e, f] = rescaling_factors(Rescaling::anti_de_sitter, T);
    CHECK(e == doctest::Approx(1 / (1 + T * T)).epsilon(1e-15));
    CHECK(f == doctest::Approx(e * e).epsilon(1e-15));
  }
  CHECK_THROWS_AS(rescaling_factors(Rescaling::wick, 1.0), Error);
  CHECK_THROWS_AS(rescaling_factors(Rescaling::de_sitter, 1.0), Error);
  CHECK_THROWS_AS(rescaling_factors(Rescaling::anti_de_sitter, 0.0), Error);
  // Near T = 0 the de Sitter horizontal factor tends to 1.
  CHECK(rescaling_factors(Rescaling::de_sitter, 1e-6).first == doctest::Approx(1.0));
}

TEST_CASE("Wick rotation to hyperbolic space") {
  LocalPoint p{2.0, 0.3, -0.5, 1.0};
  Vec4 x = wick_rotate(p);
  CHECK(minkowski4(x, x) == doctest::Approx(-1.0).epsilon(1e-12));

  Mat3 W = wick_pullback(p), F = flat_metric(p);
  double a = 1 / (2.0 * 2.0 - 1);
  CHECK(W(1, 1) == doctest::Approx(F(1, 1) * a).epsilon(1e-6));
  CHECK(W(2, 2) == doctest::Approx(F(2, 2) * a).epsilon(1e-6));
  CHECK(W(0, 0) == doctest::Approx(std::abs(F(0, 0)) * a * a).epsilon(1e-6));

  Gen g(9);
  for (int i = 0; i < 60; ++i) {
    LocalPoint q = interior_point(g, 1.1, 4.0, g.uniform(0.3, 2.0), 1e-3);
    Vec4 y = wick_rotate(q);
    CHECK(minkowski4(y, y) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(y[0] > 0);
    Mat3 G = wick_pullback(q), R = rescaled_metric(Rescaling::wick, q);
    CHECK(max_abs(G - R) < 1e-6 * max_abs(R));
    // Distance to the bent surface underneath.
    Vec4 b = bent_boundary_point(q);
    CHECK(minkowski4(b, b) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::acosh(-minkowski4(y, b)) == doctest::Approx(std::atanh(1 / q.T)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(wick_rotate(LocalPoint{1.0, 0, 0, 1.0}), Error);
  CHECK_THROWS_AS(wick_rotate(LocalPoint{0.5, 0, 0, 1.0}), Error);
}

TEST_CASE("Wick rotation is C1 across the seams and hyperbolic") {
  for (double T : {1.2, 2.0, 5.0})
    for (double alpha0 : {0.4, 1.0, 2.5}) {
      CHECK(seam_c1_residual(LocalMap::wick, T, -0.3, alpha0, 0) < 1e-6);
      CHECK(seam_c1_residual(LocalMap::wick, T, -0.3, alpha0, 1) < 1e-6);
    }
  Gen g(10);
  for (int i = 0; i < 8; ++i) {
    LocalPoint p = interior_point(g, 1.3, 3.0, 1.0);
    CHECK(constant_curvature_residual(literal(1.0, wick_pullback_literal), coords(p), -1.0) <
          1e-4);
    auto R = [](const LocalPoint& q) { return rescaled_metric_literal(Rescaling::wick, q); };
    CHECK(constant_curvature_residual(literal(1.0, R), coords(p), -1.0) < 1e-5);
  }
}

TEST_CASE("de Sitter rescaling") {
  Gen g(11);
  for (int i = 0; i < 8; ++i) {
    LocalPoint p = interior_point(g, 0.2, 0.8, 0.3);
    Mat3 M = rescale_ds(p);
    CHECK(M(0, 0) < 0);
    auto R = [](const LocalPoint& q) { return rescaled_metric_literal(Rescaling::de_sitter, q); };
    CHECK(constant_curvature_residual(literal(0.3, R), coords(p), 1.0) < 1e-4);
  }
  // Proper time along a gradient line: integral of sqrt(beta) dT.
  for (double T : {0.1, 0.5, 0.9}) {
    const int n = 2000;
    double sum = 0;
    for (int k = 0; k <= n; ++k) {
      double t = T * k / n;
      double w = (k == 0 || k == n) ? 1 : (k % 2 ? 4 : 2);
      sum += w / (1 - t * t);
    }
    sum *= T / n / 3;
    CHECK(ds_cosmological_time(T) == doctest::Approx(sum).epsilon(1e-9));
  }
  CHECK_THROWS_AS(rescale_ds(LocalPoint{1.0, 0, 0, 1.0}), Error);
}

TEST_CASE("anti-de Sitter map") {
  LocalPoint p{1.5, 0.2, 0.1, 1.0};
  REQUIRE(regime(p) == Regime::band);
  RMat x = ads_map(p);
  CHECK(x.det() == doctest::Approx(1.0).epsilon(1e-12));
  double tau = std::atan(1.5), s2 = std::sin(tau) * std::sin(tau);
  Mat3 G = ads_pullback(p);
  Mat3 expect = Eigen::Vector3d(-1, s2, s2).asDiagonal();
  CHECK(max_abs(G - expect) < 1e-6);

  Gen g(12);
  for (int i = 0; i < 60; ++i) {
    LocalPoint q = interior_point(g, 0.1, 4.0, g.uniform(0.3, 2.0), 1e-3);
    RMat y = ads_map(q);
    CHECK(std::abs(y.det() - 1) < 1e-10);
    Mat3 A = ads_pullback(q), B = ads_rescaled_tau(q);
    CHECK(max_abs(A - B) < 1e-6);
    Mat3 C = to_adapted(ads_pullback_literal(q), q), D = rescaled_metric(Rescaling::anti_de_sitter, q);
    CHECK(max_abs(C - D) < 1e-6 * max_abs(D));
  }
  for (double T : {0.3, 1.0, 3.0}) {
    CHECK(seam_c1_residual(LocalMap::ads, T, 0.4, 0.8, 0) < 1e-6);
    CHECK(seam_c1_residual(LocalMap::ads, T, 0.4, 0.8, 1) < 1e-6);
  }
  for (int i = 0; i < 6; ++i) {
    LocalPoint q = interior_point(g, 0.3, 2.5, 1.0);
    CHECK(constant_curvature_residual(literal(1.0, ads_pullback_literal), coords(q), -1.0) <
          1e-4);
  }
}

TEST_CASE("cosmological-time level geometry") {
  auto [s, k] = ct_level_geometry(1.0, 0);
  CHECK(s == 1.0);
  CHECK(k == 1.0);
  auto [s1, k1] = ct_level_geometry(0.7, 1);
  CHECK(s1 == doctest::Approx(std::sinh(0.7)));
  CHECK(k1 == doctest::Approx(1 / std::tanh(0.7)));
  auto [s2, k2] = ct_level_geometry(kPi / 2 - 1e-9, -1);
  CHECK(s2 == doctest::Approx(1.0));
  CHECK(k2 < 1e-8);
  CHECK_THROWS_AS(ct_level_geometry(2.0, -1), Error);
  CHECK_THROWS_AS(ct_level_geometry(-1.0, 0), Error);
  CHECK_THROWS_AS(ct_level_geometry(1.0, 2), Error);
  // Width of the band at level a: integral of sqrt(h_zeta zeta) over it.
  for (double a : {0.3, 1.0, 4.0}) {
    const double alpha0 = 0.8;
    const int n = 400;
    double w = 0;
    for (int i = 0; i < n; ++i) {
      LocalPoint q{a, 0.0, (i + 0.5) / n * alpha0 / a, alpha0};
      w += std::sqrt(flat_metric(q)(1, 1)) * alpha0 / a / n;
    }
    CHECK(w == doctest::Approx(alpha0).epsilon(1e-12));
  }
}

TEST_CASE("one-geodesic regular domain") {
  Gen g(13);
  for (double alpha0 : {0.5, 2.0, kInf}) {
    auto planes = one_geodesic_support(alpha0, 12);
    for (int i = 0; i < 50; ++i) {
      LocalPoint p{g.uniform(0.1, 3), g.uniform(-1, 1), g.uniform(-1, 3), alpha0};
      Vec3 q = flat_point(p);
      CHECK(regular_domain_contains(q, planes));
      CHECK(one_geodesic_ct(q, alpha0) == doctest::Approx(p.T).epsilon(1e-12));
    }
    CHECK_FALSE(regular_domain_contains(Vec3(-1, 0, 0), planes));
    CHECK_THROWS_AS(one_geodesic_ct(Vec3(0.5, 2, 0), alpha0), Error);
  }
}

TEST_CASE("flat translation part on a torus") {
  PantDecomposition pd = PantDecomposition::once_punctured_torus();
  FNPoint F{{0.0}, {1.3}, {0.4}};
  Holonomy h = holonomy_from_fn(pd, F);
  const double a = 0.7;
  Lamination lam = Lamination::multicurve(pd, {a});
  Lamination none = Lamination::multicurve(pd, {0.0});

  cplx x0 = h.base_point;
  LiftCache empty(none, h, x0, 4.0);
  CHECK(flat_translation(empty, x0, mobius(h.gens[0], x0)).norm() == 0.0);

  // A short segment across exactly one lift.
  LiftCache cache(lam, h, x0, 6.0);
  bool found = false;
  for (int k = 0; k < h.rank() && !found; ++k) {
    cplx y = mobius(h.gens[k], x0);
    LiftFamily f = cache.crossing(x0, y);
    if (f.leaves.size() != 1) continue;
    found = true;
    Vec3 s = flat_translation_part(f);
    Vec3 v = s / a;
    CHECK(minkowski(v, v) == doctest::Approx(1.0).epsilon(1e-12));
    const Geodesic& l = f.leaves[0].leaf;
    cplx on = point_on_geodesic(l, 0.3);
    CHECK(std::abs(minkowski(v, hyperboloid(on))) < 1e-10);
    CHECK(minkowski(v, hyperboloid(y)) > 0);
    CHECK(minkowski(v, hyperboloid(x0)) < 0);
  }
  CHECK(found);

  // Path independence through three intermediate points.
  Gen g(14);
  for (int i = 0; i < 20; ++i) {
    cplx x = mobius(h.gens[g.integer(0, 1)], x0);
    Vec3 direct = flat_translation(cache, x0, x);
    for (int k = 0; k < 3; ++k) {
      cplx y = x0 + cplx(g.uniform(-0.5, 0.5), g.uniform(-0.3, 0.3)) * x0.imag();
      Vec3 via = flat_translation(cache, x0, y) + flat_translation(cache, y, x);
      CHECK((direct - via).norm() < 1e-10);
    }
  }
}

TEST_CASE("affine holonomy is a homomorphism") {
  PantDecomposition pd = PantDecomposition::once_punctured_torus();
  FNPoint F{{0.0}, {1.1}, {0.3}};
  Holonomy h = holonomy_from_fn(pd, F);
  Lamination lam = Lamination::multicurve(pd, {0.9});
  FlatHolonomy fh = flat_holonomy(h, lam);
  CHECK(fh.converged);
  Eigen::Matrix3d J = Eigen::Vector3d(-1, 1, 1).asDiagonal();
  for (const auto& A : fh.gens)
    CHECK((A.linear.transpose() * J * A.linear - J).cwiseAbs().maxCoeff() < 1e-10);

  // Translation of a word read directly from the realized lamination.
  cplx x0 = h.base_point;
  LiftCache cache(lam, h, x0, 9.0);
  Gen g(15);
  for (int i = 0; i < 20; ++i) {
    Word w;
    int len = g.integer(1, 3);
    for (int k = 0; k < len; ++k) w.push_back(letter(g.integer(0, 1), g.coin()));
    w = reduce(w);
    if (w.empty()) continue;
    AffineIsom3 A = fh.eval(w);
    Vec3 direct = flat_translation(cache, x0, mobius(h.eval(w), x0));
    CHECK((A.translation - direct).norm() < 1e-8 * std::max(1.0, direct.norm()));
    CHECK((A.linear - so21(h.eval(w))).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("regular domain membership with a lamination") {
  PantDecomposition pd = PantDecomposition::once_punctured_torus();
  Holonomy h = holonomy_from_fn(pd, FNPoint{{0.0}, {1.2}, {0.2}});
  Lamination none = Lamination::multicurve(pd, {0.0});
  Lamination lam = Lamination::multicurve(pd, {0.8});
  // Future cone without a lamination.
  CHECK(regular_domain_contains(Vec3(2, 0.3, -0.4), none, h));
  CHECK_FALSE(regular_domain_contains(Vec3(-2, 0.3, -0.4), none, h));
  CHECK_FALSE(regular_domain_contains(Vec3(-2, 0.3, -0.4), lam, h));

  // Far in the future of the base point everything is inside; deeper
  // sampling never turns false into true.
  Vec3 X0 = hyperboloid(h.base_point);
  CHECK(regular_domain_contains(20 * X0, lam, h));
  auto coarse = domain_support(lam, h, h.base_point, 2.0, 6, 6);
  auto fine = domain_support(lam, h, h.base_point, 2.0, 6, 12);
  Gen g(16);
  for (int i = 0; i < 200; ++i) {
    Vec3 q = g.uniform(0.1, 3.0) * X0 + Vec3(g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1));
    if (regular_domain_contains(q, fine)) CHECK(regular_domain_contains(q, coarse));
  }
}
