#include "mgh/earthquake.hpp"

#include <algorithm>

namespace mgh {

namespace {
double side_sign(QuakeSide s) { return s == QuakeSide::left ? 1.0 : -1.0; }
}  // namespace

FNPoint quake_coordinates(const FNPoint& F, const Lamination& lam, QuakeSide side) {
  if (lam.family != LamFamily::multicurve)
    fail(ErrorCode::InvalidLamination, "twist quakes need a multicurve lamination");
  if (lam.weights.size() != F.twist.size() || lam.punctures != static_cast<int>(F.boundary.size()))
    fail(ErrorCode::DimensionMismatch, "lamination and FN point use different decompositions");
  FNPoint out = F;
  for (std::size_t j = 0; j < out.twist.size(); ++j)
    out.twist[j] += side_sign(side) * lam.weights[j];
  return out;
}

ShearPoint quake_shear(const ShearPoint& F, const Lamination& lam, QuakeSide side) {
  if (lam.family != LamFamily::triangulation)
    fail(ErrorCode::InvalidLamination, "shear quakes need a triangulation lamination");
  if (lam.weights.size() != F.s.size() || lam.tri->triangles != F.tri.triangles)
    fail(ErrorCode::DimensionMismatch, "lamination and shear point use different triangulations");
  ShearPoint out = F;
  for (std::size_t e = 0; e < out.s.size(); ++e) out.s[e] += side_sign(side) * lam.weights[e];
  return out;
}

RMat quake_cocycle(const LiftFamily& lifts, QuakeSide side) {
  check_disjoint(lifts.leaves);
  double sg = side_sign(side);
  return cocycle_product(lifts, RMat::identity(), [sg](const Geodesic& l, double a) {
    return translation(l, sg * a);
  });
}

RMat quake_cocycle(const LiftCache& cache, cplx x, cplx y, QuakeSide side) {
  return quake_cocycle(cache.crossing(x, y, true), side);
}

double generator_radius(const Holonomy& h) {
  double r = 0.0;
  for (const RMat& g : h.gens)
    r = std::max(r, hyp_distance(h.base_point, mobius(g, h.base_point)));
  return r + 0.5;
}

DeformedHolonomy quake_holonomy(const Holonomy& h, const Lamination& lam, QuakeSide side,
                                int depth) {
  DeformedHolonomy out{h, 0, true};
  if (lam.empty()) return out;
  cplx x0 = h.base_point;
  LiftCache cache(lam, h, x0, generator_radius(h), depth);
  out.depth = cache.depth();
  for (int k = 0; k < h.rank(); ++k) {
    LiftFamily f = cache.crossing(x0, mobius(h.gens[k], x0));
    out.converged = out.converged && f.converged;
    out.h.gens[k] = normalized(quake_cocycle(f, side) * h.gens[k]);
  }
  return out;
}

// ---- enhanced quake flow ----------------------------------------------------

FlowState FlowState::make(const EnhancedPoint& F, const EnhancedLam& lam) {
  F.validate();
  lam.validate();
  return make(F.boundary, F.eps, measure_spectrum_peripheral(lam.lam), lam.eta);
}

FlowState FlowState::make(std::vector<double> length, std::vector<int> eps,
                          std::vector<double> I, std::vector<int> eta) {
  std::size_t r = length.size();
  if (eps.size() != r || I.size() != r || eta.size() != r)
    fail(ErrorCode::DimensionMismatch, "flow state fields have different lengths");
  for (std::size_t i = 0; i < r; ++i) {
    if (!(length[i] >= 0) || !(I[i] >= 0))
      fail(ErrorCode::InvalidArgument, "lengths and spectra must be >= 0");
    if ((eps[i] != 1 && eps[i] != -1) || (eta[i] != 1 && eta[i] != -1))
      fail(ErrorCode::InvalidArgument, "signs must be +1 or -1");
    if (length[i] == 0 && eps[i] != 1)
      fail(ErrorCode::InvalidArgument, "cusps carry eps = +1");
  }
  FlowState s;
  s.l0_ = std::move(length);
  s.eps0_ = std::move(eps);
  s.I_ = std::move(I);
  s.eta0_ = std::move(eta);
  return s;
}

double FlowState::signed_gap(int i) const { return l0_[i] - t_ * eta0_[i] * I_[i]; }

double FlowState::length(int i) const { return std::abs(signed_gap(i)); }

bool FlowState::cusp(int i) const { return signed_gap(i) == 0.0; }

int FlowState::eps(int i) const {
  if (cusp(i)) return 1;
  return eps0_[i] * sign0(signed_gap(i));
}

int FlowState::eta(int i) const { return eta0_[i] * sign0(signed_gap(i)); }

int FlowState::sigma(int i) const { return cusp(i) ? 1 : eta(i); }

double FlowState::enhanced_length(int i) const {
  return cusp(i) ? 0.0 : eps0_[i] * signed_gap(i);
}

double FlowState::enhanced_spectrum(int i) const { return eps0_[i] * eta0_[i] * I_[i]; }

double FlowState::critical_time(int i) const {
  double rate = eta0_[i] * I_[i];
  if (l0_[i] > 0 && rate > 0) return l0_[i] / rate;
  return kInf;
}

FlowState FlowState::advanced(double dt) const {
  FlowState s = *this;
  s.t_ += dt;
  return s;
}

FlowState quake_flow(const FlowState& s, double t) {
  if (!(t >= 0))
    fail(ErrorCode::InvalidArgument,
         "quake flow needs t >= 0; use the right earthquake flow for negative times");
  return s.advanced(t);
}

bool quake_compatible(const std::vector<double>& l0, const std::vector<int>& sigma0,
                      const std::vector<double>& l1, const std::vector<int>& sigma1) {
  std::size_t r = l0.size();
  if (sigma0.size() != r || l1.size() != r || sigma1.size() != r)
    fail(ErrorCode::DimensionMismatch, "signed surfaces have different puncture counts");
  for (std::size_t i = 0; i < r; ++i) {
    if (l1[i] < l0[i] && sigma0[i] != 1) return false;
    if (l1[i] > l0[i] && sigma1[i] != 1) return false;
  }
  return true;
}

Lamination solve_twist_earthquake(const PantDecomposition& pd, const FNPoint& F0,
                                  const FNPoint& F1) {
  auto same_shape = [&](const FNPoint& F) {
    return static_cast<int>(F.boundary.size()) == pd.punctures &&
           static_cast<int>(F.length.size()) == pd.interior &&
           static_cast<int>(F.twist.size()) == pd.interior;
  };
  if (!same_shape(F0) || !same_shape(F1))
    fail(ErrorCode::DimensionMismatch, "FN points do not match the pant decomposition");
  if (F0.boundary != F1.boundary || F0.length != F1.length)
    fail(ErrorCode::NoChartWitness,
         "lengths differ; only twist-chart earthquakes are constructed");
  std::vector<double> w(pd.interior);
  for (int j = 0; j < pd.interior; ++j) {
    w[j] = F1.twist[j] - F0.twist[j];
    if (w[j] < 0)
      fail(ErrorCode::NoChartWitness,
           "twist of z" + std::to_string(j) + " decreases; no left twist earthquake");
  }
  return Lamination::multicurve(pd, std::move(w));
}

}  // namespace mgh
