#include "mgh/blackhole.hpp"

#include <cmath>
#include <sstream>

namespace mgh {

namespace {

double angle_from(double base, double x) {
  double d = circle_angle(x) - circle_angle(base);
  if (d < 0) d += 2 * kPi;
  return d;
}

std::pair<double, double> ends(const RMat& g, const char* side) {
  IsomClass c = classify(g);
  if (c.kind == IsomKind::hyperbolic || c.kind == IsomKind::parabolic)
    return {c.fixed_attracting, c.fixed_repelling};
  fail(ErrorCode::WrongClass, std::string(side) + " peripheral holonomy is " +
                                  kind_name(c.kind));
}

// Side of a rectangle: the arc between the fixed points that misses the
// orbit sample.
CircleArc choose_side(const RMat& g, const std::vector<double>& sample, const char* side) {
  auto [att, rep] = ends(g, side);
  if (classify(g).kind == IsomKind::parabolic) return {true, att, att};
  CircleArc a{false, att, rep}, b{false, rep, att};
  const double tol = 1e-9;
  int na = 0, nb = 0;
  for (double x : sample) {
    if (a.contains(x, tol)) ++na;
    if (b.contains(x, tol)) ++nb;
  }
  if (na == 0 && nb > 0) return a;
  if (nb == 0 && na > 0) return b;
  fail(ErrorCode::AmbiguousSide, std::string(side) +
                                     " side of the rectangle is ambiguous at this depth; "
                                     "increase the orbit depth");
}

}  // namespace

HorizonData horizon_invariants(const RMat& gL, const RMat& gR) {
  IsomClass a = classify(gL), b = classify(gR);
  if (a.kind != IsomKind::hyperbolic || b.kind != IsomKind::hyperbolic)
    fail(ErrorCode::DegenerateHorizon, "horizon needs hyperbolic left and right holonomy");
  return {(a.translation_length + b.translation_length) / 2,
          (a.translation_length - b.translation_length) / 2};
}

double circle_angle(double x) {
  if (std::isinf(x)) return kPi;
  double t = 2 * std::atan(x);
  return t < 0 ? t + 2 * kPi : t;
}

bool CircleArc::contains(double x, double tol) const {
  if (point) return false;
  double span = angle_from(from, to);
  double d = angle_from(from, x);
  return d > tol && d < span - tol;
}

std::vector<double> limit_set_sample(const Holonomy& h, int depth) {
  std::vector<double> seeds;
  for (const RMat& g : h.gens) {
    IsomClass c = classify(g);
    if (c.kind == IsomKind::hyperbolic) {
      seeds.push_back(c.fixed_attracting);
      seeds.push_back(c.fixed_repelling);
    } else if (c.kind == IsomKind::parabolic) {
      seeds.push_back(c.fixed_attracting);
    }
  }
  std::vector<double> out = seeds;
  for_each_reduced<RMat>(h.rank(), depth, h.gens, RMat::identity(),
                         [&](const Word&, const RMat& g) {
                           RMat n = normalized(g);
                           for (double p : seeds) out.push_back(mobius_boundary(n, p));
                           return true;
                         });
  return out;
}

Rectangle peripheral_rectangle(const RMat& gL, const RMat& gR,
                               const std::vector<double>& left_sample,
                               const std::vector<double>& right_sample, int depth) {
  Rectangle r;
  r.left = choose_side(gL, left_sample, "left");
  r.right = choose_side(gR, right_sample, "right");
  r.degenerate = r.left.point || r.right.point;
  auto [aL, rL] = ends(gL, "left");
  auto [aR, rR] = ends(gR, "right");
  r.horizon = {{{aL, aR}, {rL, rR}}};
  r.depth = depth;
  return r;
}

Rectangle peripheral_rectangle(const AdSHolonomy& h, const Word& gamma, int depth) {
  return peripheral_rectangle(h.left.eval(gamma), h.right.eval(gamma),
                              limit_set_sample(h.left, depth),
                              limit_set_sample(h.right, depth), depth);
}

std::vector<Rectangle> peripheral_rectangles(const AdSHolonomy& h, int depth) {
  auto ls = limit_set_sample(h.left, depth);
  auto rs = limit_set_sample(h.right, depth);
  std::vector<Rectangle> out;
  for (const Word& w : h.left.peripheral)
    out.push_back(peripheral_rectangle(h.left.eval(w), h.right.eval(w), ls, rs, depth));
  return out;
}

OmegaResult omega_contains(const RMat& x, const AdSHolonomy& h, int depth) {
  if (depth < 1) fail(ErrorCode::InvalidArgument, "causality depth must be at least 1");
  if (h.left.rank() != h.right.rank())
    fail(ErrorCode::DimensionMismatch, "left and right holonomy have different ranks");
  std::vector<AdSIsometry> gens;
  for (int k = 0; k < h.left.rank(); ++k) gens.push_back({h.right.gens[k], h.left.gens[k]});
  RMat p = normalized(x);
  OmegaResult res{true, depth};
  for_each_reduced<AdSIsometry>(static_cast<int>(gens.size()), depth, gens, AdSIsometry{},
                                [&](const Word&, const AdSIsometry& g) {
                                  if (!res.inside) return false;
                                  if (causal_type(p, g.apply(p)) != Causal::spacelike)
                                    res.inside = false;
                                  return res.inside;
                                });
  return res;
}

AdSHolonomy t_symmetry(const AdSHolonomy& h) {
  AdSHolonomy out = h;
  std::swap(out.left, out.right);
  return out;
}

Rectangle t_symmetry(const Rectangle& r) {
  Rectangle out = r;
  std::swap(out.left, out.right);
  for (auto& v : out.horizon) std::swap(v[0], v[1]);
  return out;
}

bool MeridianChoice::all_lower() const {
  for (bool u : upper)
    if (u) return false;
  return true;
}

bool MeridianChoice::all_upper() const {
  for (bool u : upper)
    if (!u) return false;
  return true;
}

std::vector<MeridianChoice> extremal_meridians(const std::vector<Rectangle>& rects) {
  std::vector<const Rectangle*> live;
  for (const Rectangle& r : rects)
    if (!r.degenerate) live.push_back(&r);
  const int k = static_cast<int>(live.size());
  if (k > 20) fail(ErrorCode::InvalidArgument, "too many non-degenerate rectangles");
  std::vector<MeridianChoice> out;
  for (long mask = 0; mask < (1L << k); ++mask) {
    MeridianChoice m;
    for (int i = 0; i < k; ++i) {
      bool up = (mask >> i) & 1;
      const auto& h = live[i]->horizon;
      // Lower corner: (repelling left, attracting right).
      std::array<double, 2> corner = up ? std::array<double, 2>{h[0][0], h[1][1]}
                                        : std::array<double, 2>{h[1][0], h[0][1]};
      m.upper.push_back(up);
      m.arcs.push_back({h[0], corner, h[1]});
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool globally_hyperbolic(const std::vector<Rectangle>& rects) {
  for (const Rectangle& r : rects)
    if (!r.degenerate) return false;
  return true;
}

double BTZParams::f(double r) const {
  if (r == 0) return J == 0 ? -M : kInf;
  return -M + r * r + J * J / (4 * r * r);
}

BTZParams btz_params(double r_plus, double r_minus) {
  if (!(std::isfinite(r_plus) && std::isfinite(r_minus)) || !(r_plus > r_minus) ||
      !(r_minus >= 0))
    fail(ErrorCode::InvalidArgument, "BTZ parameters need r+ > r- >= 0");
  BTZParams p;
  p.r_plus = r_plus;
  p.r_minus = r_minus;
  p.M = r_plus * r_plus + r_minus * r_minus;
  p.J = 2 * r_plus * r_minus;
  return p;
}

BTZParams btz_from_horizon(const HorizonData& h) {
  double m = std::abs(h.momentum);
  if (!(h.size > m)) fail(ErrorCode::DegenerateHorizon, "horizon needs size > |momentum|");
  BTZParams p;
  p.r_plus = (h.size + m) / 2;
  p.r_minus = (h.size - m) / 2;
  p.M = p.r_plus * p.r_plus + p.r_minus * p.r_minus;
  p.J = 2 * p.r_plus * p.r_minus;
  p.spin = sign0(h.momentum);
  return p;
}

HorizonData btz_horizon(const BTZParams& p) {
  return {p.r_plus + p.r_minus, p.spin * (p.r_plus - p.r_minus)};
}

Mat3 btz_metric(double, double r, double, const BTZParams& p) {
  if (!(r > 0)) fail(ErrorCode::OutOfDomain, "BTZ radius must be positive");
  double f = p.f(r);
  if (std::abs(f) < 1e-12) {
    std::ostringstream msg;
    bool outer = std::abs(r - p.r_plus) <= std::abs(r - p.r_minus);
    msg << "BTZ coordinates are singular at the horizon " << (outer ? "r+" : "r-") << " = "
        << (outer ? p.r_plus : p.r_minus);
    fail(ErrorCode::CoordinateSingularity, msg.str());
  }
  Mat3 G = Mat3::Zero();
  G(0, 0) = p.M - r * r;
  G(0, 2) = G(2, 0) = -p.J / 2;
  G(1, 1) = 1 / f;
  G(2, 2) = r * r;
  return G;
}

}  // namespace mgh
