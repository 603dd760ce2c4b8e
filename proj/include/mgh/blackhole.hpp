#pragma once
// The causal extension Omega(h) of an AdS holonomy pair: membership by
// causal separation from translates, peripheral rectangles at infinity,
// horizon size and momentum, extremal meridians and the BTZ metric.

#include <array>
#include <vector>

#include "mgh/bending.hpp"

namespace mgh {

struct HorizonData {
  double size = 0;
  double momentum = 0;
};

// s = (l_L + l_R) / 2, m = (l_L - l_R) / 2. Parabolic sides have no horizon.
HorizonData horizon_invariants(const RMat& gL, const RMat& gR);

// A side of a rectangle: a single point of RP^1 or the counterclockwise arc
// from `from` to `to` (extended reals, +inf for infinity).
struct CircleArc {
  bool point = false;
  double from = 0;
  double to = 0;
  bool contains(double x, double tol = 1e-12) const;  // open arc
};

// Position on the circle in [0, 2 pi): 2 atan(x) shifted, infinity at pi.
double circle_angle(double x);

struct Rectangle {
  CircleArc left;
  CircleArc right;
  bool degenerate = true;
  // (left, right) boundary points spanning the horizon geodesic: the
  // attracting pair and the repelling pair.
  std::array<std::array<double, 2>, 2> horizon{};
  int depth = 0;
};

inline constexpr int kOrbitDepth = 10;
inline constexpr int kCausalDepth = 8;

// Orbit of the generator fixed points under reduced words of length <= depth.
std::vector<double> limit_set_sample(const Holonomy& h, int depth);

Rectangle peripheral_rectangle(const AdSHolonomy& h, const Word& gamma,
                               int depth = kOrbitDepth);
Rectangle peripheral_rectangle(const RMat& gL, const RMat& gR,
                               const std::vector<double>& left_sample,
                               const std::vector<double>& right_sample, int depth);
std::vector<Rectangle> peripheral_rectangles(const AdSHolonomy& h, int depth = kOrbitDepth);

struct OmegaResult {
  bool inside = true;
  int depth = 0;
};
// Spacelike separation from every translate by a reduced word of length
// <= depth.
OmegaResult omega_contains(const RMat& x, const AdSHolonomy& h, int depth = kCausalDepth);

// Time reversal exchanges the two components.
AdSHolonomy t_symmetry(const AdSHolonomy& h);
Rectangle t_symmetry(const Rectangle& r);

struct MeridianChoice {
  std::vector<bool> upper;  // per non-degenerate rectangle
  // Per non-degenerate rectangle: horizon vertex, corner, horizon vertex.
  std::vector<std::array<std::array<double, 2>, 3>> arcs;
  bool all_lower() const;
  bool all_upper() const;
};
std::vector<MeridianChoice> extremal_meridians(const std::vector<Rectangle>& rects);
// No non-degenerate rectangle: a single meridian.
bool globally_hyperbolic(const std::vector<Rectangle>& rects);

struct BTZParams {
  double r_plus = 1;
  double r_minus = 0;
  double M = 1;
  double J = 0;
  int spin = 1;  // sign of the momentum the parameters came from
  double f(double r) const;
};
BTZParams btz_params(double r_plus, double r_minus);
// r+- = (s +- |m|) / 2; allows the extremal case m = 0.
BTZParams btz_from_horizon(const HorizonData& h);
HorizonData btz_horizon(const BTZParams& p);
// Components in (v, r, phi).
Mat3 btz_metric(double v, double r, double phi, const BTZParams& p);

}  // namespace mgh
