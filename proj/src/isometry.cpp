#include "mgh/isometry.hpp"

#include <algorithm>
#include <sstream>

namespace mgh {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedMatrix: return "malformed-matrix";
    case ErrorCode::WrongClass: return "wrong-class";
    case ErrorCode::InvalidStructure: return "invalid-structure";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::MalformedTriangulation: return "malformed-triangulation";
    case ErrorCode::UnsupportedCurve: return "unsupported-curve";
    case ErrorCode::BasePointOnLeaf: return "base-point-on-leaf";
    case ErrorCode::InvalidLamination: return "invalid-lamination";
    case ErrorCode::NotConverged: return "not-converged";
    case ErrorCode::OutOfDomain: return "out-of-domain";
    case ErrorCode::LiftFailure: return "lift-failure";
    case ErrorCode::DegenerateHorizon: return "degenerate-horizon";
    case ErrorCode::AmbiguousSide: return "ambiguous-side";
    case ErrorCode::CoordinateSingularity: return "coordinate-singularity";
    case ErrorCode::NoChartWitness: return "no-chart-witness";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

CMat complexify(const RMat& m) { return {m.a, m.b, m.c, m.d}; }

RMat normalized(const RMat& m) {
  double D = m.det();
  if (!std::isfinite(D) || !(D > 0.0) || D < 1e-300) {
    std::ostringstream os;
    os << "matrix with determinant " << D << " is not in GL+(2,R)";
    fail(ErrorCode::MalformedMatrix, os.str());
  }
  double s = 1.0 / std::sqrt(D);
  return m * s;
}

CMat normalized(const CMat& m) {
  cplx D = m.det();
  if (!std::isfinite(D.real()) || !std::isfinite(D.imag()) ||
      std::abs(D) < 1e-300)
    fail(ErrorCode::MalformedMatrix, "singular complex matrix");
  return m * (1.0 / std::sqrt(D));
}

template <class T>
static double proj_dist_impl(const Mat2<T>& m, const Mat2<T>& n) {
  double plus = (m - n).norm_max();
  double minus = (m + n).norm_max();
  return std::min(plus, minus);
}

double proj_distance(const RMat& m, const RMat& n) {
  return proj_dist_impl(m, n);
}
double proj_distance(const CMat& m, const CMat& n) {
  return proj_dist_impl(m, n);
}
bool proj_equal(const RMat& m, const RMat& n, double tol) {
  return proj_dist_impl(m, n) <= tol;
}
bool proj_equal(const CMat& m, const CMat& n, double tol) {
  return proj_dist_impl(m, n) <= tol;
}

RMat expm(const RMat& x) {
  double h = 0.5 * x.trace();
  RMat y = x - RMat::identity() * h;
  double q = -y.det();  // y^2 = q Id
  double ch, shc;       // cosh(sqrt q), sinh(sqrt q)/sqrt q
  if (q > 1e-16) {
    double r = std::sqrt(q);
    ch = std::cosh(r);
    shc = std::sinh(r) / r;
  } else if (q < -1e-16) {
    double r = std::sqrt(-q);
    ch = std::cos(r);
    shc = std::sin(r) / r;
  } else {
    ch = 1.0 + q / 2.0;
    shc = 1.0 + q / 6.0;
  }
  RMat e = RMat::identity() * ch + y * shc;
  return e * std::exp(h);
}

CMat expm(const CMat& x) {
  cplx h = 0.5 * x.trace();
  CMat y = x - CMat::identity() * h;
  cplx q = -y.det();
  cplx ch, shc;
  if (std::abs(q) > 1e-16) {
    cplx r = std::sqrt(q);
    ch = std::cosh(r);
    shc = std::sinh(r) / r;
  } else {
    ch = 1.0 + q / 2.0;
    shc = 1.0 + q / 6.0;
  }
  CMat e = CMat::identity() * ch + y * shc;
  return e * std::exp(h);
}

cplx mobius(const RMat& g, cplx z) { return (g.a * z + g.b) / (g.c * z + g.d); }

double mobius_boundary(const RMat& g, double x) {
  if (std::isinf(x)) return g.c == 0.0 ? kInf : g.a / g.c;
  double den = g.c * x + g.d;
  if (den == 0.0) return kInf;
  return (g.a * x + g.b) / den;
}

const char* kind_name(IsomKind k) {
  switch (k) {
    case IsomKind::identity: return "identity";
    case IsomKind::elliptic: return "elliptic";
    case IsomKind::parabolic: return "parabolic";
    case IsomKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

namespace {

// Both roots of c z^2 + (d - a) z - b = 0, computed without cancellation.
std::pair<double, double> fixed_roots(const RMat& g, double disc) {
  double scale = g.norm_max();
  double p = g.a - g.d;
  if (std::abs(g.c) <= 1e-15 * scale) {
    // One fixed point at infinity; the other solves (d - a) z = b.
    return {kInf, std::abs(p) > 0 ? g.b / (g.d - g.a) : kInf};
  }
  double s = std::sqrt(std::max(disc, 0.0));
  double q = p + (p >= 0 ? s : -s);  // same sign as p
  double r1 = q / (2.0 * g.c);
  double r2 = (q != 0.0) ? (-2.0 * g.b) / q : r1;
  return {r1, r2};
}

bool is_attracting(const RMat& g, double z) {
  if (std::isinf(z)) return std::abs(g.a) > std::abs(g.d);  // c == 0 case
  return std::abs(g.c * z + g.d) > 1.0;
}

}  // namespace

IsomClass classify(const RMat& gin, double tol) {
  RMat g = normalized(gin);
  IsomClass out;
  double tr = std::abs(g.trace());
  out.trace = tr;
  double off = std::max({std::abs(g.b), std::abs(g.c), std::abs(g.a - g.d)});
  if (std::abs(tr - 2.0) <= tol) {
    if (off <= tol) {
      out.kind = IsomKind::identity;
      return out;
    }
    out.kind = IsomKind::parabolic;
    double fp = std::abs(g.c) <= 1e-15 * g.norm_max()
                    ? kInf
                    : (g.a - g.d) / (2.0 * g.c);
    out.fixed_attracting = out.fixed_repelling = fp;
    return out;
  }
  if (tr > 2.0) {
    out.kind = IsomKind::hyperbolic;
    out.translation_length = 2.0 * std::acosh(tr / 2.0);
    double disc = g.trace() * g.trace() - 4.0;
    auto [r1, r2] = fixed_roots(g, disc);
    if (!is_attracting(g, r1)) std::swap(r1, r2);
    out.fixed_attracting = r1;
    out.fixed_repelling = r2;
    return out;
  }
  out.kind = IsomKind::elliptic;
  // Interior fixed point: c z^2 + (d - a) z - b = 0 with negative discriminant.
  double disc = g.trace() * g.trace() - 4.0;
  cplx z = cplx(g.a - g.d, std::sqrt(-disc)) / (2.0 * g.c);
  if (z.imag() < 0) z = std::conj(z);
  out.interior_fixed = z;
  cplx deriv = 1.0 / ((g.c * z + g.d) * (g.c * z + g.d));
  double ang = std::arg(deriv);
  if (ang <= 0) ang += 2.0 * kPi;
  out.rotation_angle = ang;
  return out;
}

double translation_length(const RMat& g, double tol) {
  IsomClass k = classify(g, tol);
  if (k.kind == IsomKind::identity) return 0.0;
  if (k.kind != IsomKind::hyperbolic)
    fail(ErrorCode::WrongClass, std::string("translation length of a ") +
                                    kind_name(k.kind) + " element");
  return k.translation_length;
}

std::pair<double, double> fixed_points(const RMat& g, double tol) {
  IsomClass k = classify(g, tol);
  if (k.kind != IsomKind::hyperbolic)
    fail(ErrorCode::WrongClass,
         std::string("fixed points requested for a ") + kind_name(k.kind) +
             " element");
  return {k.fixed_attracting, k.fixed_repelling};
}

Geodesic axis(const RMat& g, double tol) {
  auto [att, rep] = fixed_points(g, tol);
  return {rep, att};
}

Geodesic mobius(const RMat& g, const Geodesic& l) {
  return {mobius_boundary(g, l.minus), mobius_boundary(g, l.plus)};
}

static bool same_point(double x, double y, double tol) {
  if (std::isinf(x) || std::isinf(y)) {
    if (std::isinf(x) && std::isinf(y)) return true;
    double f = std::isinf(x) ? y : x;
    return std::abs(f) > 1.0 / tol;
  }
  return std::abs(x - y) <= tol * std::max(1.0, std::max(std::abs(x), std::abs(y)));
}

bool same_geodesic(const Geodesic& l, const Geodesic& m, double tol) {
  return same_point(l.minus, m.minus, tol) && same_point(l.plus, m.plus, tol);
}

bool same_unoriented(const Geodesic& l, const Geodesic& m, double tol) {
  return same_geodesic(l, m, tol) || same_geodesic(l, m.reversed(), tol);
}

bool geodesics_cross(const Geodesic& l, const Geodesic& m, double tol) {
  // Endpoints of m on opposite sides of l, read through the normal form.
  Vec3 n = leaf_normal(l);
  double s1 = minkowski(boundary_null(m.minus), n);
  double s2 = minkowski(boundary_null(m.plus), n);
  double sc1 = std::max(1.0, boundary_null(m.minus).cwiseAbs().maxCoeff());
  double sc2 = std::max(1.0, boundary_null(m.plus).cwiseAbs().maxCoeff());
  return (s1 / sc1 > tol && s2 / sc2 < -tol) ||
         (s1 / sc1 < -tol && s2 / sc2 > tol);
}

RMat involution(const Geodesic& l) {
  double m = l.minus, p = l.plus;
  if (std::isinf(m) && std::isinf(p))
    fail(ErrorCode::InvalidArgument, "degenerate geodesic");
  if (std::isinf(p)) return {1.0, -2.0 * m, 0.0, -1.0};
  if (std::isinf(m)) return {-1.0, 2.0 * p, 0.0, 1.0};
  if (p == m) fail(ErrorCode::InvalidArgument, "degenerate geodesic");
  double k = 1.0 / (p - m);
  return {k * (p + m), -2.0 * k * p * m, 2.0 * k, -k * (p + m)};
}

RMat unit_generator(const Geodesic& l) { return involution(l) * 0.5; }

RMat translation(const Geodesic& l, double a) {
  RMat K = involution(l);
  return RMat::identity() * std::cosh(a / 2.0) + K * std::sinh(a / 2.0);
}

CMat rotation_generator(const Geodesic& l) {
  return complexify(unit_generator(l)) * cplx(0.0, 1.0);
}

double minkowski(const Vec3& u, const Vec3& v) {
  return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 hyperboloid(cplx z) {
  double x = z.real(), y = z.imag();
  double r = std::norm(z);
  return {(r + 1.0) / (2.0 * y), (r - 1.0) / (2.0 * y), x / y};
}

cplx from_hyperboloid(const Vec3& v) {
  // x0 - x1 = 1/y, x2 = x/y
  double y = 1.0 / (v[0] - v[1]);
  return {v[2] * y, y};
}

Vec3 boundary_null(double p) {
  if (std::isinf(p)) return {0.5, 0.5, 0.0};
  return {(p * p + 1.0) / 2.0, (p * p - 1.0) / 2.0, p};
}

Vec3 leaf_normal(const Geodesic& l) {
  Vec3 u = boundary_null(l.plus), v = boundary_null(l.minus);
  Vec3 w = u.cross(v);
  w[0] = -w[0];
  double n2 = minkowski(w, w);
  if (!(n2 > 0)) fail(ErrorCode::InvalidArgument, "degenerate geodesic");
  return w / std::sqrt(n2);
}

Mat3 so21(const RMat& g) {
  // Columns are the images of the basis vectors, with the point (x0,x1,x2)
  // stored as the symmetric matrix [[x0+x1, x2], [x2, x0-x1]].
  Mat3 out;
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e[k] = 1.0;
    RMat s{e[0] + e[1], e[2], e[2], e[0] - e[1]};
    RMat gt{g.a, g.c, g.b, g.d};
    RMat r = g * s * gt;
    out(0, k) = 0.5 * (r.a + r.d);
    out(1, k) = 0.5 * (r.a - r.d);
    out(2, k) = 0.5 * (r.b + r.c);
  }
  return out;
}

double hyp_distance(cplx z, cplx w) {
  double num = std::norm(z - w);
  double arg = 1.0 + num / (2.0 * z.imag() * w.imag());
  return std::acosh(std::max(1.0, arg));
}

double signed_distance(const Geodesic& l, cplx z) {
  return std::asinh(minkowski(hyperboloid(z), leaf_normal(l)));
}

cplx point_on_geodesic(const Geodesic& l, double s) {
  cplx base;
  if (std::isinf(l.plus)) base = cplx(l.minus, 1.0);
  else if (std::isinf(l.minus)) base = cplx(l.plus, 1.0);
  else base = cplx(0.5 * (l.minus + l.plus), 0.5 * std::abs(l.plus - l.minus));
  return mobius(translation(l, s), base);
}

H3Point mobius(const CMat& g, const H3Point& p) {
  cplx den = g.c * p.z + g.d;
  double D = std::norm(den) + std::norm(g.c) * p.t * p.t;
  cplx z = ((g.a * p.z + g.b) * std::conj(den) +
            g.a * std::conj(g.c) * p.t * p.t) / D;
  double det_abs = std::abs(g.det());
  return {z, p.t * det_abs / D};
}

H3Point h3_inclusion(cplx z) { return {cplx(z.real(), 0.0), z.imag()}; }

Vec4 h3_to_minkowski(const H3Point& p) {
  double r = std::norm(p.z) + p.t * p.t;
  return {(1.0 + r) / (2.0 * p.t), p.z.real() / p.t, p.z.imag() / p.t,
          (1.0 - r) / (2.0 * p.t)};
}

double minkowski4(const Vec4& u, const Vec4& v) {
  return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

double h3_distance(const H3Point& p, const H3Point& q) {
  double arg = 1.0 + (std::norm(p.z - q.z) + (p.t - q.t) * (p.t - q.t)) /
                         (2.0 * p.t * q.t);
  return std::acosh(std::max(1.0, arg));
}

const char* causal_name(Causal c) {
  switch (c) {
    case Causal::coincident: return "coincident";
    case Causal::timelike: return "timelike";
    case Causal::lightlike: return "lightlike";
    case Causal::spacelike: return "spacelike";
  }
  return "?";
}

double ads_inner(const RMat& p, const RMat& q) {
  return -0.5 * (p.trace() * q.trace() - (p * q).trace());
}

Causal causal_type(const RMat& pin, const RMat& qin, double tol) {
  RMat p = normalized(pin), q = normalized(qin);
  if (proj_equal(p, q, tol)) return Causal::coincident;
  double tr = std::abs((p.adj() * q).trace());
  if (std::abs(tr - 2.0) <= tol) return Causal::lightlike;
  return tr < 2.0 ? Causal::timelike : Causal::spacelike;
}

RMat point_matrix(cplx z) {
  double x = z.real(), y = z.imag();
  return {x / y, -(x * x + y * y) / y, 1.0 / y, -x / y};
}

cplx point_from_matrix(const RMat& pin) {
  RMat p = pin.c < 0 ? -pin : pin;
  return cplx(p.a / p.c, 1.0 / p.c);
}

RMat DualGeodesic::point(double s) const {
  return RMat::identity() * std::cosh(s) + generator * std::sinh(s);
}

AdSIsometry DualGeodesic::rotation(double t) const {
  return {point(-t), point(t)};
}

DualGeodesic dual_geodesic(const Geodesic& l) {
  return {l, involution(l)};
}

}  // namespace mgh
