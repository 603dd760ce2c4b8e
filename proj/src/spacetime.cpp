#include "mgh/spacetime.hpp"

#include <cmath>

#include "mgh/earthquake.hpp"

namespace mgh {

namespace {

using Eigen::VectorXd;

void require_T(double T) {
  if (!(T > 0) || !std::isfinite(T))
    fail(ErrorCode::OutOfDomain, "cosmological time must be positive");
}

double seam(const LocalPoint& p) { return p.alpha0 / p.T; }

// zeta' = zeta - alpha0 / T
double zeta_prime(const LocalPoint& p) { return p.zeta - seam(p); }

// The three regime formulas, each extended analytically past its stratum so
// one-sided derivatives can be taken at the seams.
VectorXd flat_formula(const LocalPoint& p, Regime r) {
  double T = p.T, cu = std::cosh(p.u), su = std::sinh(p.u);
  VectorXd x(3);
  switch (r) {
    case Regime::negative: {
      double cz = std::cosh(p.zeta), sz = std::sinh(p.zeta);
      x << T * cu * cz, T * su * cz, T * sz;
      break;
    }
    case Regime::band:
      x << T * cu, T * su, T * p.zeta;
      break;
    case Regime::beyond: {
      double zp = zeta_prime(p);
      x << T * cu * std::cosh(zp), T * su * std::cosh(zp), T * std::sinh(zp) + p.alpha0;
      break;
    }
  }
  return x;
}

VectorXd wick_formula(const LocalPoint& p, Regime r) {
  double T = p.T;
  double ch = T / std::sqrt(T * T - 1), sh = 1 / std::sqrt(T * T - 1);
  double cu = std::cosh(p.u), su = std::sinh(p.u);
  VectorXd x(4);
  switch (r) {
    case Regime::negative: {
      double cz = std::cosh(p.zeta), sz = std::sinh(p.zeta);
      x << ch * cz * cu, ch * cz * su, ch * sz, sh;
      break;
    }
    case Regime::band: {
      double th = T * p.zeta;
      x << ch * cu, ch * su, sh * std::sin(th), sh * std::cos(th);
      break;
    }
    case Regime::beyond: {
      double zp = zeta_prime(p), a = p.alpha0;
      double cz = std::cosh(zp), sz = std::sinh(zp);
      x << ch * cz * cu, ch * cz * su, ch * sz * std::cos(a) + sh * std::sin(a),
          -ch * sz * std::sin(a) + sh * std::cos(a);
      break;
    }
  }
  return x;
}

// Past endpoint x- (vertex on the initial singularity) and future endpoint
// x+ (point of the dual plane) of the timelike segment through p.
std::pair<RMat, RMat> ads_join_ends(const LocalPoint& p, Regime r) {
  const RMat X0{1, 0, 0, -1};
  double eu = std::exp(p.u);
  RMat Y{0, -eu, 1 / eu, 0};
  switch (r) {
    case Regime::negative:
      return {RMat::identity(), Y * std::cosh(p.zeta) - X0 * std::sinh(p.zeta)};
    case Regime::band: {
      double th = p.T * p.zeta;
      return {RMat{std::exp(-th), 0, 0, std::exp(th)}, Y};
    }
    case Regime::beyond: {
      double zp = zeta_prime(p), a = p.alpha0;
      RMat V{std::exp(-a), 0, 0, std::exp(a)};
      return {V, Y * std::cosh(zp) - X0 * V * std::sinh(zp)};
    }
  }
  return {};
}

RMat ads_formula_matrix(const LocalPoint& p, Regime r) {
  auto [lo, hi] = ads_join_ends(p, r);
  double tau = std::atan(p.T);
  return lo * std::cos(tau) + hi * std::sin(tau);
}

VectorXd ads_formula(const LocalPoint& p, Regime r) {
  RMat m = ads_formula_matrix(p, r);
  VectorXd x(4);
  x << m.a, m.b, m.c, m.d;
  return x;
}

VectorXd local_map(LocalMap map, const LocalPoint& p, Regime r) {
  switch (map) {
    case LocalMap::flat: return flat_formula(p, r);
    case LocalMap::wick: return wick_formula(p, r);
    case LocalMap::ads: return ads_formula(p, r);
  }
  return {};
}

double map_inner(LocalMap map, const VectorXd& a, const VectorXd& b) {
  switch (map) {
    case LocalMap::flat: return minkowski(Vec3(a), Vec3(b));
    case LocalMap::wick: return minkowski4(Vec4(a), Vec4(b));
    case LocalMap::ads: return ads_inner(RMat{a[0], a[1], a[2], a[3]}, RMat{b[0], b[1], b[2], b[3]});
  }
  return 0;
}

// Jacobian in literal coordinates (T, zeta, u), with the regime held fixed.
// Central differences at h, h/2, h/4 and two Richardson steps.
Eigen::MatrixXd jacobian(LocalMap map, const LocalPoint& p, Regime r) {
  const double h = std::min(2e-3, 0.25 * p.T);
  auto f = [&](int i, double s) {
    LocalPoint q = p;
    if (i == 0) q.T += s;
    if (i == 1) q.zeta += s;
    if (i == 2) q.u += s;
    return local_map(map, q, r);
  };
  Eigen::MatrixXd J(map == LocalMap::flat ? 3 : 4, 3);
  for (int i = 0; i < 3; ++i) {
    VectorXd d1 = (f(i, h) - f(i, -h)) / (2 * h);
    VectorXd d2 = (f(i, h / 2) - f(i, -h / 2)) / h;
    VectorXd d4 = (f(i, h / 4) - f(i, -h / 4)) / (h / 2);
    VectorXd r1 = (4 * d2 - d1) / 3, r2 = (4 * d4 - d2) / 3;
    J.col(i) = (16 * r2 - r1) / 15;
  }
  return J;
}

Mat3 pullback(LocalMap map, const LocalPoint& p) {
  Eigen::MatrixXd J = jacobian(map, p, regime(p));
  Mat3 G;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) G(i, j) = map_inner(map, J.col(i), J.col(j));
  return G;
}

}  // namespace

Regime regime(const LocalPoint& p) {
  if (p.zeta < 0) return Regime::negative;
  if (p.zeta <= seam(p)) return Regime::band;
  return Regime::beyond;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::negative: return "negative";
    case Regime::band: return "band";
    case Regime::beyond: return "beyond";
  }
  return "?";
}

Vec3 flat_point(const LocalPoint& p) {
  require_T(p.T);
  return Vec3(flat_formula(p, regime(p)));
}

Vec3 gauss_map(const LocalPoint& p) {
  require_T(p.T);
  switch (regime(p)) {
    case Regime::negative: {
      double cz = std::cosh(p.zeta);
      return {std::cosh(p.u) * cz, std::sinh(p.u) * cz, std::sinh(p.zeta)};
    }
    case Regime::band: return {std::cosh(p.u), std::sinh(p.u), 0.0};
    case Regime::beyond: {
      double zp = zeta_prime(p);
      return {std::cosh(p.u) * std::cosh(zp), std::sinh(p.u) * std::cosh(zp), std::sinh(zp)};
    }
  }
  return {};
}

double warp(const LocalPoint& p) {
  switch (regime(p)) {
    case Regime::negative: return std::cosh(p.zeta);
    case Regime::band: return 1.0;
    case Regime::beyond: return std::cosh(zeta_prime(p));
  }
  return 1.0;
}

double gradient_slope(const LocalPoint& p) {
  switch (regime(p)) {
    case Regime::negative: return 0.0;
    case Regime::band: return -p.zeta / p.T;
    case Regime::beyond: return -p.alpha0 / (p.T * p.T);
  }
  return 0.0;
}

Mat3 adapted_frame(const LocalPoint& p) {
  Mat3 F = Mat3::Identity();
  F(1, 0) = gradient_slope(p);
  return F;
}

Mat3 to_adapted(const Mat3& literal, const LocalPoint& p) {
  Mat3 F = adapted_frame(p);
  return F.transpose() * literal * F;
}

Mat3 to_literal(const Mat3& adapted, const LocalPoint& p) {
  Mat3 Fi = adapted_frame(p).inverse();
  return Fi.transpose() * adapted * Fi;
}

Mat3 flat_metric(const LocalPoint& p) {
  require_T(p.T);
  double T2 = p.T * p.T, w = warp(p);
  return Eigen::Vector3d(-1.0, T2, T2 * w * w).asDiagonal();
}

Mat3 flat_metric_literal(const LocalPoint& p) { return to_literal(flat_metric(p), p); }

std::pair<double, double> rescaling_factors(Rescaling kind, double T) {
  require_T(T);
  double a = 0;
  switch (kind) {
    case Rescaling::wick:
      if (T <= 1) fail(ErrorCode::OutOfDomain, "Wick rotation needs T > 1");
      a = 1 / (T * T - 1);
      break;
    case Rescaling::de_sitter:
      if (T >= 1) fail(ErrorCode::OutOfDomain, "de Sitter rescaling needs T < 1");
      a = 1 / (1 - T * T);
      break;
    case Rescaling::anti_de_sitter:
      a = 1 / (1 + T * T);
      break;
  }
  return {a, a * a};
}

Mat3 rescaled_metric(Rescaling kind, const LocalPoint& p) {
  auto [a, b] = rescaling_factors(kind, p.T);
  double T2 = p.T * p.T, w = warp(p);
  double vertical = kind == Rescaling::wick ? b : -b;
  return Eigen::Vector3d(vertical, a * T2, a * T2 * w * w).asDiagonal();
}

Mat3 rescaled_metric_literal(Rescaling kind, const LocalPoint& p) {
  return to_literal(rescaled_metric(kind, p), p);
}

Mat3 rescale_ds(const LocalPoint& p) { return rescaled_metric(Rescaling::de_sitter, p); }

double ds_cosmological_time(double T) {
  if (!(T > 0 && T < 1)) fail(ErrorCode::OutOfDomain, "de Sitter rescaling needs 0 < T < 1");
  return std::atanh(T);
}

Vec4 wick_rotate(const LocalPoint& p) {
  require_T(p.T);
  if (p.T <= 1) fail(ErrorCode::OutOfDomain, "Wick rotation needs T > 1");
  return Vec4(wick_formula(p, regime(p)));
}

Vec4 bent_boundary_point(const LocalPoint& p) {
  require_T(p.T);
  double cu = std::cosh(p.u), su = std::sinh(p.u);
  switch (regime(p)) {
    case Regime::negative: {
      double cz = std::cosh(p.zeta), sz = std::sinh(p.zeta);
      return {cz * cu, cz * su, sz, 0.0};
    }
    case Regime::band: return {cu, su, 0.0, 0.0};
    case Regime::beyond: {
      double zp = zeta_prime(p), a = p.alpha0;
      return {std::cosh(zp) * cu, std::cosh(zp) * su, std::sinh(zp) * std::cos(a),
              -std::sinh(zp) * std::sin(a)};
    }
  }
  return {};
}

Mat3 wick_pullback_literal(const LocalPoint& p) {
  wick_rotate(p);
  return pullback(LocalMap::wick, p);
}

Mat3 wick_pullback(const LocalPoint& p) { return to_adapted(wick_pullback_literal(p), p); }

RMat ads_map(const LocalPoint& p) {
  require_T(p.T);
  Regime r = regime(p);
  auto [lo, hi] = ads_join_ends(p, r);
  if (lo.trace() <= 0) fail(ErrorCode::LiftFailure, "past vertex lift has non-positive trace");
  RMat rel = lo.inverse() * hi;
  if (!(rel.c > 0)) fail(ErrorCode::LiftFailure, "join segment is not future-directed");
  return ads_formula_matrix(p, r);
}

Mat3 ads_pullback_literal(const LocalPoint& p) {
  ads_map(p);
  return pullback(LocalMap::ads, p);
}

Mat3 ads_pullback(const LocalPoint& p) {
  Mat3 G = to_adapted(ads_pullback_literal(p), p);
  // e_tau = (1 + T^2) e_T
  double s = 1 + p.T * p.T;
  G.row(0) *= s;
  G.col(0) *= s;
  return G;
}

Mat3 ads_rescaled_tau(const LocalPoint& p) {
  require_T(p.T);
  double s = std::sin(std::atan(p.T)), w = warp(p);
  return Eigen::Vector3d(-1.0, s * s, s * s * w * w).asDiagonal();
}

double seam_c1_residual(LocalMap map, double T, double u, double alpha0, int seam_index) {
  LocalPoint p{T, u, 0.0, alpha0};
  Regime lo = Regime::negative, hi = Regime::band;
  if (seam_index == 1) {
    if (!std::isfinite(alpha0)) fail(ErrorCode::InvalidArgument, "no second seam for alpha0 = inf");
    p.zeta = alpha0 / T;
    lo = Regime::band;
    hi = Regime::beyond;
  } else if (seam_index != 0) {
    fail(ErrorCode::InvalidArgument, "seam index must be 0 or 1");
  }
  if (map == LocalMap::wick && T <= 1) fail(ErrorCode::OutOfDomain, "Wick rotation needs T > 1");
  double jump0 = (local_map(map, p, lo) - local_map(map, p, hi)).cwiseAbs().maxCoeff();
  double jump1 = (jacobian(map, p, lo) - jacobian(map, p, hi)).cwiseAbs().maxCoeff();
  return std::max(jump0, jump1);
}

std::pair<double, double> ct_level_geometry(double a, int kappa) {
  switch (kappa) {
    case 0:
      if (!(a > 0)) break;
      return {a, 1 / a};
    case 1:
      if (!(a > 0)) break;
      return {std::sinh(a), 1 / std::tanh(a)};
    case -1:
      if (!(a > 0 && a < kPi / 2)) break;
      return {std::sin(a), 1 / std::tan(a)};
    default:
      fail(ErrorCode::InvalidArgument, "curvature sign must be 0, 1 or -1");
  }
  fail(ErrorCode::OutOfDomain, "level outside the range of the cosmological time");
}

// ---- flat regular domains ------------------------------------------------------

Vec3 flat_translation_part(const LiftFamily& lifts) {
  Vec3 s = Vec3::Zero();
  for (const WeightedGeodesic& w : lifts.leaves) {
    double a = w.endpoint != 0 ? 0.5 * w.weight : w.weight;
    // The leaf has the segment start on its left, so -n points forward.
    s -= a * leaf_normal(w.leaf);
  }
  return s;
}

Vec3 flat_translation(const LiftCache& cache, cplx x, cplx y) {
  return flat_translation_part(cache.crossing(x, y, true));
}

AffineIsom3 FlatHolonomy::eval(const Word& w) const {
  return evaluate(w, gens, AffineIsom3{});
}

FlatHolonomy flat_holonomy(const Holonomy& h, const Lamination& lam, int depth) {
  FlatHolonomy out;
  out.base = h;
  for (const RMat& g : h.gens) out.gens.push_back({so21(g), Vec3::Zero()});
  if (lam.empty()) return out;
  cplx x0 = h.base_point;
  LiftCache cache(lam, h, x0, generator_radius(h), depth);
  out.depth = cache.depth();
  for (int k = 0; k < h.rank(); ++k) {
    LiftFamily f = cache.crossing(x0, mobius(h.gens[k], x0));
    out.converged = out.converged && f.converged;
    out.gens[k].translation = flat_translation_part(f);
  }
  return out;
}

bool regular_domain_contains(const Vec3& q, const std::vector<SupportPlane>& planes) {
  for (const SupportPlane& P : planes)
    if (!(minkowski(q - P.s, P.x) < 0)) return false;
  return true;
}

std::vector<SupportPlane> domain_support(const Lamination& lam, const Holonomy& h,
                                         cplx center, double radius, int grid, int depth) {
  if (grid < 1) fail(ErrorCode::InvalidArgument, "grid must be positive");
  std::vector<cplx> pts;
  // Polar grid in the disc, built in the chart where the center is i.
  RMat to_center = normalized(RMat{center.imag(), center.real(), 0, 1});
  for (int i = 0; i <= grid; ++i) {
    double r = radius * i / grid;
    int spokes = i == 0 ? 1 : 4 * grid;
    for (int k = 0; k < spokes; ++k) {
      double th = 2 * kPi * k / spokes;
      // point at distance r from i in direction th, in the disc model
      double t = std::tanh(r / 2);
      cplx w = t * std::polar(1.0, th);
      cplx z = cplx(0, 1) * (1.0 + w) / (1.0 - w);
      pts.push_back(mobius(to_center, z));
    }
  }
  std::vector<SupportPlane> out;
  if (lam.empty()) {
    for (cplx z : pts) out.push_back({hyperboloid(z), Vec3::Zero()});
    return out;
  }
  LiftCache cache(lam, h, center, radius + 0.5, depth);
  auto on_leaf = [&](cplx z) {
    Vec3 X = hyperboloid(z);
    for (const auto& w : cache.lifts())
      if (std::abs(minkowski(X, leaf_normal(w.leaf))) < std::sinh(kLeafTol)) return true;
    return false;
  };
  for (cplx z : pts) {
    if (on_leaf(z)) continue;
    out.push_back({hyperboloid(z), flat_translation(cache, center, z)});
  }
  // Both sides of every leaf, next to its point closest to the center.
  Vec3 C = hyperboloid(center);
  for (const auto& w : cache.lifts()) {
    Vec3 n = leaf_normal(w.leaf);
    Vec3 foot = C - minkowski(C, n) * n;
    foot /= std::sqrt(-minkowski(foot, foot));
    for (double e : {-1e-6, 1e-6}) {
      Vec3 X = std::cosh(e) * foot + std::sinh(e) * n;
      cplx z = from_hyperboloid(X);
      if (hyp_distance(z, center) > radius) continue;
      out.push_back({X, flat_translation(cache, center, z)});
    }
  }
  return out;
}

bool regular_domain_contains(const Vec3& q, const Lamination& lam, const Holonomy& h,
                             int depth) {
  return regular_domain_contains(
      q, domain_support(lam, h, h.base_point, generator_radius(h), 8, depth));
}

std::vector<SupportPlane> one_geodesic_support(double alpha0, int grid) {
  if (!(alpha0 > 0)) fail(ErrorCode::InvalidArgument, "weight must be positive");
  if (grid < 1) fail(ErrorCode::InvalidArgument, "grid must be positive");
  const Vec3 v0(0, 0, 1);
  std::vector<SupportPlane> out;
  // Points (cosh r cos.., ...) on the hyperboloid, polar grid of radius 4,
  // plus the leaf itself from both sides.
  for (int i = 0; i <= grid; ++i) {
    double r = 4.0 * i / grid;
    int spokes = i == 0 ? 1 : 4 * grid + 2;
    for (int k = 0; k < spokes; ++k) {
      double th = 2 * kPi * (k + 0.5) / spokes;
      Vec3 X(std::cosh(r), std::sinh(r) * std::cos(th), std::sinh(r) * std::sin(th));
      Vec3 s = X[2] > 0 && std::isfinite(alpha0) ? Vec3(alpha0 * v0) : Vec3::Zero();
      if (X[2] > 0 && !std::isfinite(alpha0)) continue;
      out.push_back({X, s});
    }
  }
  for (int i = -grid; i <= grid; ++i) {
    double u = 4.0 * i / grid;
    Vec3 X(std::cosh(u), std::sinh(u), 0);
    out.push_back({X, Vec3::Zero()});
    if (std::isfinite(alpha0)) out.push_back({X, alpha0 * v0});
  }
  return out;
}

double one_geodesic_ct(const Vec3& q, double alpha0) {
  // Nearest-in-the-Lorentzian-sense point r = s v0 of the singular segment.
  double s = std::clamp(q[2], 0.0, alpha0);
  Vec3 d = q - Vec3(0, 0, s);
  double n = -minkowski(d, d);
  if (!(n > 0) || d[0] <= 0) fail(ErrorCode::OutOfDomain, "point outside the regular domain");
  return std::sqrt(n);
}

}  // namespace mgh
