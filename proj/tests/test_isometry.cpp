#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mgh/isometry.hpp"
#include "support.hpp"

using namespace mgh;
using mgh::testing::Gen;

TEST_CASE("projective equality accepts both signs") {
  Gen g(11);
  for (int i = 0; i < 100; ++i) {
    RMat m = g.sl2();
    CHECK(proj_equal(m, -m));
    CHECK(proj_equal(complexify(m), complexify(m) * cplx(-1.0, 0.0)));
  }
  CHECK_FALSE(proj_equal(RMat::identity(), RMat{1, 1, 0, 1}));
}

TEST_CASE("normalization and malformed input") {
  RMat m{2, 1, 1, 3};
  CHECK(std::abs(normalized(m).det() - 1.0) < 1e-12);
  CHECK_THROWS_AS(normalized(RMat{1, 2, 2, 4}), Error);
  CHECK_THROWS_AS(normalized(RMat{0, 1, 1, 0}), Error);
}

TEST_CASE("classify boundary and generic cases") {
  CHECK(classify(RMat{1, 1, 0, 1}).kind == IsomKind::parabolic);
  CHECK(classify(RMat{-1, 0, 3, -1}).kind == IsomKind::parabolic);
  CHECK(classify(RMat::identity()).kind == IsomKind::identity);
  CHECK(classify(-RMat::identity()).kind == IsomKind::identity);

  RMat h{3, -1, 1, 0};  // trace 3
  IsomClass k = classify(h);
  CHECK(k.kind == IsomKind::hyperbolic);
  // Oracle: diagonalize, eigenvalue lambda with lambda + 1/lambda = 3 moves
  // i to lambda^2 i, displacement 2 log lambda.
  double lam = (3 + std::sqrt(5.0)) / 2;
  CHECK(k.translation_length == doctest::Approx(2 * std::log(lam)).epsilon(1e-14));
  CHECK(k.translation_length == doctest::Approx(1.9248473002384139).epsilon(1e-12));

  RMat e{1, -1, 1, 0};  // trace 1
  IsomClass ke = classify(e);
  CHECK(ke.kind == IsomKind::elliptic);
  CHECK(ke.rotation_angle > 0);
  CHECK(ke.rotation_angle < 2 * kPi);
  CHECK(std::abs(mobius(e, ke.interior_fixed) - ke.interior_fixed) < 1e-12);
}

TEST_CASE("elliptic rotation angle is the counterclockwise angle at the fixed point") {
  for (double th : {0.3, 1.0, 2.5, 4.0, 5.9}) {
    RMat r{std::cos(th / 2), std::sin(th / 2), -std::sin(th / 2), std::cos(th / 2)};
    IsomClass k = classify(r);
    REQUIRE(k.kind == IsomKind::elliptic);
    // Push a tangent vector at i and read off the angle numerically.
    cplx z0(0, 1), eps(1e-7, 0);
    cplx w = (mobius(r, z0 + eps) - mobius(r, z0)) / eps;
    double ang = std::arg(w);
    if (ang <= 0) ang += 2 * kPi;
    CHECK(k.rotation_angle == doctest::Approx(ang).epsilon(1e-6));
  }
}

TEST_CASE("translation length of exponentials") {
  Geodesic l{0, kInf};
  RMat X = involution(l);  // translation length of exp(tX) is 2t
  CHECK(translation_length(expm(X * 0.7)) == doctest::Approx(1.4).epsilon(1e-13));
  CHECK(translation_length(RMat::identity()) == 0.0);
  double e = std::exp(1.0);
  CHECK(translation_length(RMat{e, 0, 0, 1 / e}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(translation_length(RMat{1, 1, 0, 1}), Error);
  CHECK_THROWS_AS(translation_length(RMat{0, -1, 1, 0}), Error);
  // exp(a X^) translates by a.
  Gen g(3);
  for (int i = 0; i < 50; ++i) {
    Geodesic m{g.uniform(-3, 3), g.uniform(-3, 3)};
    if (std::abs(m.plus - m.minus) < 0.1) continue;
    double a = g.uniform(0.01, 5);
    CHECK(translation_length(expm(unit_generator(m) * a)) == doctest::Approx(a).epsilon(1e-10));
    CHECK(proj_equal(expm(unit_generator(m) * a), translation(m, a), 1e-10));
  }
}

TEST_CASE("fixed points and axis") {
  double lam = 2.0;
  auto [att, rep] = fixed_points(RMat{lam, 0, 0, 1 / lam});
  CHECK(std::isinf(att));
  CHECK(rep == 0.0);
  Geodesic ax = axis(RMat{lam, 0, 0, 1 / lam});
  CHECK(ax.minus == 0.0);
  CHECK(std::isinf(ax.plus));

  Gen g(5);
  for (int i = 0; i < 200; ++i) {
    RMat h = g.hyperbolic();
    auto [a, r] = fixed_points(h);
    for (double p : {a, r}) {
      if (std::isinf(p)) continue;
      CHECK(std::abs(mobius_boundary(h, p) - p) < 1e-10 * std::max(1.0, std::abs(p)));
    }
    // Equivariance of fixed points under conjugation.
    RMat c = g.sl2();
    auto [a2, r2] = fixed_points(c * h * c.inverse());
    CHECK(same_geodesic(Geodesic{r2, a2}, mobius(c, Geodesic{r, a}), 1e-8));
    // Axis invariance and displacement equals translation length.
    Geodesic l = axis(h);
    CHECK(same_geodesic(mobius(h, l), l, 1e-8));
    cplx x = point_on_geodesic(l, g.uniform(-1, 1));
    CHECK(hyp_distance(x, mobius(h, x)) ==
          doctest::Approx(translation_length(h)).epsilon(1e-9));
    // h is the translation along its axis towards the attracting point.
    CHECK(signed_distance(l, x) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(proj_equal(translation(l, translation_length(h)), normalized(h), 1e-8));
  }
  CHECK_THROWS_AS(fixed_points(RMat{1, 1, 0, 1}), Error);
  CHECK_THROWS_AS(axis(RMat{0, -1, 1, 0}), Error);
}

TEST_CASE("classification is conjugation invariant") {
  Gen g(17);
  int n = 0;
  for (int i = 0; i < 1000; ++i) {
    RMat m = g.coin() ? g.hyperbolic() : g.sl2(2.0);
    RMat h = g.sl2();
    RMat c = h * m * h.inverse();
    IsomClass k1 = classify(m), k2 = classify(c);
    CHECK(k1.kind == k2.kind);
    if (k1.kind == IsomKind::hyperbolic) {
      CHECK(std::abs(k1.translation_length - k2.translation_length) < 1e-10);
      ++n;
    }
  }
  CHECK(n > 300);
}

TEST_CASE("hyperboloid model, normals and signed distance") {
  Gen g(23);
  for (int i = 0; i < 200; ++i) {
    cplx z = g.point();
    Vec3 x = hyperboloid(z);
    CHECK(minkowski(x, x) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(from_hyperboloid(x) - z) < 1e-12);
    RMat h = g.sl2();
    Vec3 y = so21(h) * x;
    CHECK((y - hyperboloid(mobius(h, z))).norm() < 1e-9 * y.norm());
    Geodesic l{g.uniform(-2, 2), g.coin() ? kInf : g.uniform(-2, 2)};
    if (g.coin()) l = l.reversed();
    if (!std::isinf(l.minus) && !std::isinf(l.plus) && std::abs(l.minus - l.plus) < 0.1) continue;
    // Independent oracle: the perpendicular foot by minimizing distance over
    // the geodesic, sign from the half-plane inequality.
    double best = 1e300;
    for (int k = -4000; k <= 4000; ++k) {
      best = std::min(best, hyp_distance(z, point_on_geodesic(l, k * 0.0025)));
    }
    double sd = signed_distance(l, z);
    CHECK(std::abs(std::abs(sd) - best) < 1e-4);
    double x0 = z.real(), y0 = z.imag();
    double sgn;
    if (std::isinf(l.plus)) sgn = l.minus - x0;
    else if (std::isinf(l.minus)) sgn = x0 - l.plus;
    else sgn = (l.plus > l.minus ? 1 : -1) * ((x0 - l.minus) * (x0 - l.plus) + y0 * y0);
    if (std::abs(sd) > 1e-6) CHECK((sgn > 0) == (sd > 0));
  }
}

TEST_CASE("so21 preserves the Minkowski form") {
  Gen g(29);
  Mat3 G = Vec3(-1, 1, 1).asDiagonal();
  for (int i = 0; i < 100; ++i) {
    Mat3 A = so21(g.sl2());
    CHECK((A.transpose() * G * A - G).cwiseAbs().maxCoeff() < 1e-10 * A.squaredNorm());
    CHECK(A.determinant() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("rotation generator closes up after angle 2 pi") {
  Gen g(31);
  for (int i = 0; i < 50; ++i) {
    Geodesic l{g.uniform(-3, 3), g.coin() ? kInf : g.uniform(-3, 3)};
    CMat X = rotation_generator(l);
    CHECK(proj_equal(expm(X * cplx(2 * kPi, 0)), CMat::identity(), 1e-10));
    // Points of l are fixed by the rotation.
    cplx p = point_on_geodesic(l, g.uniform(-1, 1));
    H3Point q = mobius(expm(X * cplx(0.8, 0)), h3_inclusion(p));
    CHECK(h3_distance(q, h3_inclusion(p)) < 1e-7);
  }
}

TEST_CASE("causal type matches the brute-force oracle") {
  Gen g(37);
  CausalOracle trace_rule = [](const RMat& p, const RMat& q) { return causal_type(p, q); };
  CausalOracle brute = mgh::testing::causal_bruteforce;
  RMat id = RMat::identity();
  CHECK(trace_rule(id, id) == Causal::coincident);
  CHECK(brute(id, g.elliptic()) == Causal::timelike);
  CHECK(trace_rule(id, g.elliptic()) == Causal::timelike);
  RMat hx = expm(involution(Geodesic{0, kInf}) * 0.4);
  CHECK(brute(id, hx) == Causal::spacelike);
  CHECK(trace_rule(id, hx) == Causal::spacelike);
  CHECK(brute(id, RMat{1, 1, 0, 1}) == Causal::lightlike);
  CHECK(trace_rule(id, RMat{1, 1, 0, 1}) == Causal::lightlike);
  for (int i = 0; i < 300; ++i) {
    RMat p = g.sl2(), q = g.sl2();
    Causal c = trace_rule(p, q);
    CHECK(c == brute(p, q));
    RMat al = g.sl2(), be = g.sl2();
    CHECK(c == trace_rule(al * p * be.inverse(), al * q * be.inverse()));
  }
}

TEST_CASE("dual geodesic and rotations") {
  Gen g(41);
  for (int i = 0; i < 50; ++i) {
    Geodesic l{g.uniform(-2, 2), g.coin() ? kInf : g.uniform(-2, 2)};
    DualGeodesic d = dual_geodesic(l);
    double t = g.uniform(-1.5, 1.5);
    AdSIsometry rot = d.rotation(t);
    CHECK(proj_equal(rot.apply(RMat::identity()), d.point(2 * t), 1e-10));
    CHECK(proj_equal(d.rotation(0).apply(d.point(0.7)), d.point(0.7)));
    // Points of l inside P(Id) are fixed by the rotation.
    cplx p = point_on_geodesic(l, g.uniform(-1, 1));
    CHECK(proj_equal(rot.apply(point_matrix(p)), point_matrix(p), 1e-9));
    // Oracle: arc length of s -> point(s) by midpoint quadrature in the AdS
    // metric, compared with the angle between the normals Id and its image.
    const int n = 2000;
    double len = 0;
    for (int k = 0; k < n; ++k) {
      double s = 2 * t * (k + 0.5) / n, h = 1e-5;
      RMat v = (d.point(s + h) - d.point(s - h)) * (1.0 / (2 * h));
      len += std::sqrt(ads_inner(v, v)) * std::abs(2 * t) / n;
    }
    RMat img = rot.apply(RMat::identity());
    double ang = std::acosh(std::max(1.0, -ads_inner(RMat::identity(), img)));
    CHECK(std::abs(ang - len) < 1e-6);
  }
  CHECK_THROWS_AS(dual_geodesic(Geodesic{1.0, 1.0}), Error);
}

TEST_CASE("points of P(Id) are equivariant") {
  Gen g(43);
  for (int i = 0; i < 100; ++i) {
    cplx z = g.point();
    RMat h = g.sl2();
    CHECK(proj_equal(h * point_matrix(z) * h.inverse(), point_matrix(mobius(h, z)), 1e-9));
    CHECK(std::abs(point_from_matrix(point_matrix(z)) - z) < 1e-12);
  }
}
