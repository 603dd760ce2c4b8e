#pragma once
// Flat regular domains and the one-geodesic local model in cosmological-time
// coordinates (T, u, zeta), together with the Wick rotation to H^3 and the
// rescalings to de Sitter and anti-de Sitter space.
//
// Metric samples are 3x3 matrices in the frame (T, zeta, u) adapted to the
// cosmological time: the first vector is the gradient line of T (the curve
// of fixed Gauss image), the others are d/dzeta and d/du. Literal coordinate
// components are available separately for curvature computations.

#include <vector>

#include "mgh/lamination.hpp"

namespace mgh {

struct LocalPoint {
  double T = 1.0;
  double u = 0.0;
  double zeta = 0.0;
  double alpha0 = kInf;  // kInf drops the third regime
};

enum class Regime { negative, band, beyond };
Regime regime(const LocalPoint& p);
const char* regime_name(Regime r);

// ---- flat model -------------------------------------------------------------
Vec3 flat_point(const LocalPoint& p);
// Future unit normal of the level surface through p.
Vec3 gauss_map(const LocalPoint& p);
// Warping factor of du^2 relative to T^2 dzeta^2: cosh(zeta), 1 or cosh(zeta').
double warp(const LocalPoint& p);
// d zeta / dT along the gradient line through p.
double gradient_slope(const LocalPoint& p);
// Columns: adapted frame vectors in literal (T, zeta, u) components.
Mat3 adapted_frame(const LocalPoint& p);
Mat3 to_adapted(const Mat3& literal, const LocalPoint& p);
Mat3 to_literal(const Mat3& adapted, const LocalPoint& p);

Mat3 flat_metric(const LocalPoint& p);
Mat3 flat_metric_literal(const LocalPoint& p);

// ---- rescalings -------------------------------------------------------------
enum class Rescaling { wick, de_sitter, anti_de_sitter };
// (alpha, beta): T^2 - 1, 1 - T^2 and 1 + T^2 based, with squared verticals.
std::pair<double, double> rescaling_factors(Rescaling kind, double T);
// beta dT^2 + alpha g_hor for the Wick rotation, -beta dT^2 + alpha g_hor
// otherwise.
Mat3 rescaled_metric(Rescaling kind, const LocalPoint& p);
Mat3 rescaled_metric_literal(Rescaling kind, const LocalPoint& p);
Mat3 rescale_ds(const LocalPoint& p);
// Cosmological time of the de Sitter rescaling, artanh(T).
double ds_cosmological_time(double T);

// ---- Wick rotation to H^3 ----------------------------------------------------
Vec4 wick_rotate(const LocalPoint& p);
// Point of the bent surface lying under D0(p).
Vec4 bent_boundary_point(const LocalPoint& p);
Mat3 wick_pullback_literal(const LocalPoint& p);
Mat3 wick_pullback(const LocalPoint& p);  // adapted frame

// ---- anti-de Sitter map --------------------------------------------------------
RMat ads_map(const LocalPoint& p);
Mat3 ads_pullback_literal(const LocalPoint& p);
// Adapted frame with tau = arctan T as the time coordinate.
Mat3 ads_pullback(const LocalPoint& p);
Mat3 ads_rescaled_tau(const LocalPoint& p);

enum class LocalMap { flat, wick, ads };
// Largest difference of the one-sided Jacobians at seam 0 (zeta = 0) or
// seam 1 (zeta = alpha0 / T).
double seam_c1_residual(LocalMap map, double T, double u, double alpha0, int seam);

// ---- cosmological-time level surfaces ----------------------------------------
// (scale factor, graft-weight factor) of the level surface at time a.
std::pair<double, double> ct_level_geometry(double a, int kappa);

// ---- flat regular domains --------------------------------------------------------
struct AffineIsom3 {
  Mat3 linear = Mat3::Identity();
  Vec3 translation = Vec3::Zero();
  Vec3 apply(const Vec3& x) const { return linear * x + translation; }
  AffineIsom3 operator*(const AffineIsom3& o) const {
    return {linear * o.linear, translation + linear * o.translation};
  }
  AffineIsom3 inverse() const {
    Mat3 L = linear.inverse();
    return {L, -(L * translation)};
  }
};

// Sum of a_i v_i over the family, v_i the unit normal of the i-th leaf
// pointing away from the segment start.
Vec3 flat_translation_part(const LiftFamily& lifts);
Vec3 flat_translation(const LiftCache& cache, cplx x, cplx y);

struct FlatHolonomy {
  Holonomy base;
  std::vector<AffineIsom3> gens;
  int depth = 0;
  bool converged = true;
  AffineIsom3 eval(const Word& w) const;
};
FlatHolonomy flat_holonomy(const Holonomy& h, const Lamination& lam, int depth = 0);

// Support plane s + x^perp with x a unit future timelike vector.
struct SupportPlane {
  Vec3 x;
  Vec3 s;
};
bool regular_domain_contains(const Vec3& q, const std::vector<SupportPlane>& planes);
// Grid samples of the disc of given radius around `center`, plus points just
// off every realized leaf meeting the disc.
std::vector<SupportPlane> domain_support(const Lamination& lam, const Holonomy& h,
                                         cplx center, double radius, int grid,
                                         int depth = 0);
bool regular_domain_contains(const Vec3& q, const Lamination& lam, const Holonomy& h,
                             int depth = 0);

// One weighted geodesic {x_2 = 0} with weight alpha0 and v0 = (0, 0, 1).
std::vector<SupportPlane> one_geodesic_support(double alpha0, int grid);
// Cosmological time of q in that model; throws out-of-domain outside it.
double one_geodesic_ct(const Vec3& q, double alpha0);

}  // namespace mgh
