#include "mgh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mgh/blackhole.hpp"
#include "mgh/curvature.hpp"
#include "mgh/earthquake.hpp"
#include "mgh/spacetime.hpp"

namespace mgh {

namespace {

const char* const kDictionary[] = {"a", "b", "ab", "[a,b]"};

double trace_gap(const Holonomy& g, const Holonomy& h) {
  double worst = 0;
  for (const char* name : kDictionary)
    worst = std::max(worst, std::abs(std::abs(g.eval(g.curve(name)).trace()) -
                                     std::abs(h.eval(h.curve(name)).trace())));
  return worst;
}

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

double rel_gap(const Mat3& a, const Mat3& b) {
  return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
}

// Grid values strictly inside (lo, hi).
std::vector<double> inner(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(lo + (hi - lo) * (k + 0.5) / n);
  return out;
}

// Keep samples off the seams, where the regime switch makes one-sided
// differences meaningless.
bool off_seams(const LocalPoint& p, double margin) {
  return std::abs(p.zeta) > margin && std::abs(p.zeta - p.alpha0 / p.T) > margin;
}

struct Suite {
  std::vector<Check>& out;
  std::string name;
  void add(const std::string& check, double value, double threshold) {
    out.push_back({name, check, value, threshold});
  }
};

void earthquake_suite(Suite s) {
  PantDecomposition pd = PantDecomposition::once_punctured_torus();
  FNPoint F{{0.0}, {1.3}, {0.4}};
  Holonomy h = holonomy_from_fn(pd, F);
  for (double a : {0.1, 0.5, 1.0, 2.0}) {
    Lamination lam = Lamination::multicurve(pd, {a});
    for (QuakeSide side : {QuakeSide::left, QuakeSide::right}) {
      DeformedHolonomy d = quake_holonomy(h, lam, side);
      Holonomy oracle = holonomy_from_fn(pd, quake_coordinates(F, lam, side));
      double gap = d.converged ? trace_gap(d.h, oracle) : kInf;
      s.add(std::string(side == QuakeSide::left ? "left" : "right") + " twist a=" +
                std::to_string(a).substr(0, 3),
            gap, 1e-8);
    }
  }
  Lamination lam = Lamination::multicurve(pd, {0.7});
  LiftCache cache(lam, h, h.base_point, generator_radius(h));
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    double t = 0.05 * i;
    cplx x = h.base_point + cplx(0.3 * std::cos(7 * t), 0.2 * std::sin(5 * t));
    cplx y = h.base_point + cplx(-0.25 * std::sin(3 * t), 0.25 * std::cos(11 * t));
    cplx z = h.base_point + cplx(0.2 * std::cos(13 * t), -0.2 * std::sin(2 * t));
    worst = std::max(worst, proj_distance(quake_cocycle(cache, x, y, QuakeSide::left) *
                                              quake_cocycle(cache, y, z, QuakeSide::left),
                                          quake_cocycle(cache, x, z, QuakeSide::left)));
  }
  s.add("cocycle composition", worst, 1e-9);
}

void bending_suite(Suite s) {
  PantDecomposition pd = PantDecomposition::once_punctured_torus();
  FNPoint F{{0.0}, {1.3}, {0.4}};
  Holonomy h = holonomy_from_fn(pd, F);
  for (double a : {0.1, 0.5, 1.0, 2.0}) {
    Lamination lam = Lamination::multicurve(pd, {a});
    AdSHolonomy ah = ads_holonomy(h, lam);
    double gl = trace_gap(ah.left, holonomy_from_fn(pd, quake_coordinates(F, lam, QuakeSide::left)));
    double gr =
        trace_gap(ah.right, holonomy_from_fn(pd, quake_coordinates(F, lam, QuakeSide::right)));
    s.add("ads components a=" + std::to_string(a).substr(0, 3), ah.converged ? std::max(gl, gr) : kInf,
          1e-8);
  }
  double close = 0;
  for (int k = 0; k < 20; ++k) {
    Geodesic l{-1.0 + 0.1 * k, 0.5 + 0.3 * k};
    close = std::max(close, proj_distance(expm(rotation_generator(l) * cplx(2 * kPi, 0)),
                                          CMat::identity()));
  }
  s.add("rotation closes after 2 pi", close, 1e-9);

  Lamination lam = Lamination::multicurve(pd, {0.8});
  ComplexHolonomy hh = hyp_holonomy(h, lam);
  s.add("cusp stays parabolic", std::abs(std::abs(hh.eval(h.peripheral[0]).trace()) - 2.0), 1e-8);
}

void wick_suite(Suite s) {
  const double alpha0 = 1.0;
  double metric = 0, curvature = 0, seams = 0;
  for (double T : inner(1.1, 3.0, 5))
    for (double u : inner(-1.0, 1.0, 5))
      for (double zeta : inner(-1.0, 1.5, 5)) {
        LocalPoint p{T, u, zeta, alpha0};
        if (!off_seams(p, 0.01)) continue;
        metric = std::max(metric, rel_gap(wick_pullback(p), rescaled_metric(Rescaling::wick, p)));
        curvature = std::max(curvature, constant_curvature_residual(
                                            literal(alpha0, wick_pullback_literal), coords(p), -1.0));
      }
  for (double T : {1.2, 2.0, 2.8})
    for (int seam : {0, 1}) seams = std::max(seams, seam_c1_residual(LocalMap::wick, T, 0.3, alpha0, seam));
  s.add("pullback equals rescaled metric", metric, 1e-6);
  s.add("curvature -1", curvature, 1e-4);
  s.add("seam C1", seams, 1e-6);
}

void rescaling_suite(Suite s) {
  const double alpha0 = 0.4;
  double ds = 0, ads_metric = 0, ads_curv = 0;
  auto R = [](const LocalPoint& q) { return rescaled_metric_literal(Rescaling::de_sitter, q); };
  for (double T : inner(0.1, 0.9, 4))
    for (double zeta : inner(-0.8, 1.2, 4)) {
      LocalPoint p{T, 0.2, zeta, alpha0};
      if (!off_seams(p, 0.01)) continue;
      ds = std::max(ds, constant_curvature_residual(literal(alpha0, R), coords(p), 1.0));
    }
  for (double T : inner(0.3, 2.5, 4))
    for (double zeta : inner(0.0, 1.0, 4)) {
      LocalPoint p{T, -0.3, zeta * alpha0 / T, alpha0};
      if (!off_seams(p, 0.01)) continue;
      ads_metric = std::max(ads_metric, rel_gap(ads_pullback(p), ads_rescaled_tau(p)));
      ads_curv = std::max(ads_curv, constant_curvature_residual(
                                        literal(alpha0, ads_pullback_literal), coords(p), -1.0));
    }
  s.add("de Sitter curvature +1", ds, 1e-4);
  s.add("anti-de Sitter band metric", ads_metric, 1e-6);
  s.add("anti-de Sitter curvature -1", ads_curv, 1e-4);
}

void flow_suite(Suite s) {
  FlowState st = FlowState::make({2.0}, {1}, {1.0}, {1});
  const double expect[] = {2, 1, 0, 1};
  double gap = 0;
  for (int k = 0; k < 4; ++k) gap = std::max(gap, std::abs(quake_flow(st, k).length(0) - expect[k]));
  s.add("bounce lengths", gap, 1e-12);
  s.add("sign flip after critical time",
        quake_flow(st, 3).sigma(0) == -1 && quake_flow(st, 1).sigma(0) == 1 ? 0.0 : 1.0, 0.5);
  double slope = (quake_flow(st, 1.5 + 1e-3).enhanced_length(0) -
                  quake_flow(st, 1.5 - 1e-3).enhanced_length(0)) /
                 2e-3;
  s.add("enhanced length slope", std::abs(slope + st.enhanced_spectrum(0)), 1e-9);
}

void blackhole_suite(Suite s) {
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    double rm = 0.1 * k, rp = rm + 0.3 + 0.05 * k;
    BTZParams p = btz_params(rp, rm);
    double sz = rp + rm, m = rp - rm;
    worst = std::max({worst, std::abs(p.M + p.J - sz * sz) / (sz * sz),
                      std::abs(p.M - p.J - m * m) / std::max(1.0, p.M),
                      std::abs(p.f(rp)) / std::max(1.0, p.M)});
    if (rm > 0) worst = std::max(worst, std::abs(p.f(rm)) / std::max(1.0, p.M));
  }
  s.add("BTZ identities", worst, 1e-12);
  BTZParams q = btz_params(1.3, 0.6);
  MetricFunction g = [&](const Eigen::VectorXd& x) {
    return Eigen::MatrixXd(btz_metric(x[0], x[1], x[2], q));
  };
  double curv = 0;
  for (double r : {2.6, 1.0, 0.3}) {
    Eigen::VectorXd x(3);
    x << 0.2, r, 0.7;
    curv = std::max(curv, constant_curvature_residual(g, x, -1.0));
  }
  s.add("BTZ curvature -1", curv, 1e-4);
  std::size_t bad = 0;
  for (int k = 0; k <= 3; ++k) {
    std::vector<Rectangle> rects(k);
    for (auto& r : rects) r.degenerate = false;
    if (extremal_meridians(rects).size() != (std::size_t{1} << k)) ++bad;
  }
  s.add("extremal meridian count", static_cast<double>(bad), 0.5);
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"earthquake", "bending",  "wick",
                                              "rescaling",  "flow",     "blackhole"};
  return names;
}

std::vector<Check> verify_suite(const std::string& suite, double tol) {
  std::vector<Check> out;
  if (suite == "all") {
    for (const auto& name : verify_suites()) {
      auto part = verify_suite(name, tol);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  Suite s{out, suite};
  if (suite == "earthquake")
    earthquake_suite(s);
  else if (suite == "bending")
    bending_suite(s);
  else if (suite == "wick")
    wick_suite(s);
  else if (suite == "rescaling")
    rescaling_suite(s);
  else if (suite == "flow")
    flow_suite(s);
  else if (suite == "blackhole")
    blackhole_suite(s);
  else
    fail(ErrorCode::InvalidArgument, "unknown verify suite '" + suite + "'");
  if (tol > 0)
    for (Check& c : out) c.threshold = tol;
  return out;
}

}  // namespace mgh
