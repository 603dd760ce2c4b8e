#include "mgh/lamination.hpp"

#include <algorithm>

namespace mgh {

Lamination Lamination::multicurve(const PantDecomposition& pd, std::vector<double> w) {
  if (static_cast<int>(w.size()) != pd.interior)
    fail(ErrorCode::DimensionMismatch, "multicurve needs one weight per pant curve");
  for (double x : w)
    if (!(x >= 0) || !std::isfinite(x))
      fail(ErrorCode::InvalidLamination, "pant curve weights must be finite and >= 0");
  Lamination l;
  l.family = LamFamily::multicurve;
  l.weights = std::move(w);
  l.punctures = pd.punctures;
  l.sigma.assign(pd.punctures, 1);
  l.pd = pd;
  return l;
}

Lamination Lamination::triangulation(const Triangulation& tri, std::vector<double> w,
                                     std::vector<int> sigma) {
  if (static_cast<int>(w.size()) != tri.edges)
    fail(ErrorCode::DimensionMismatch, "triangulation lamination needs one weight per edge");
  for (double x : w)
    if (!(x >= 0) || !std::isfinite(x))
      fail(ErrorCode::InvalidLamination, "edge weights must be finite and >= 0");
  if (sigma.empty()) sigma.assign(tri.vertices, 1);
  if (static_cast<int>(sigma.size()) != tri.vertices)
    fail(ErrorCode::DimensionMismatch, "signature needs one sign per puncture");
  for (int s : sigma)
    if (s != 1 && s != -1) fail(ErrorCode::InvalidArgument, "signature entries are +1 or -1");
  Lamination l;
  l.family = LamFamily::triangulation;
  l.weights = std::move(w);
  l.sigma = std::move(sigma);
  l.punctures = tri.vertices;
  l.tri = tri;
  return l;
}

bool Lamination::empty() const {
  return std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; });
}

Lamination Lamination::scaled(double t) const {
  if (!(t >= 0)) fail(ErrorCode::InvalidArgument, "lamination scale must be >= 0");
  Lamination l = *this;
  for (double& w : l.weights) w *= t;
  return l;
}

std::vector<int> shear_signature(const ShearPoint& x) {
  std::vector<int> out;
  for (int i = 0; i < x.tri.vertices; ++i) out.push_back(sign0(x.star_sum(i)));
  return out;
}

std::vector<double> measure_spectrum_peripheral(const Lamination& lam) {
  std::vector<double> out(lam.punctures, 0.0);
  if (lam.family == LamFamily::triangulation)
    for (int i = 0; i < lam.punctures; ++i)
      for (int e : lam.tri->star(i)) out[i] += lam.weights[e];
  return out;
}

EnhancedLam EnhancedLam::make(Lamination lam, std::vector<int> eta,
                              std::vector<PunctureKind> kinds) {
  EnhancedLam e{std::move(lam), std::move(eta), std::move(kinds)};
  if (e.eta.empty()) e.eta = e.lam.sigma;
  e.validate();
  return e;
}

void EnhancedLam::validate() const {
  if (static_cast<int>(eta.size()) != lam.punctures ||
      static_cast<int>(kinds.size()) != lam.punctures)
    fail(ErrorCode::DimensionMismatch, "relaxed signature length differs from puncture count");
  auto I = measure_spectrum_peripheral(lam);
  for (int i = 0; i < lam.punctures; ++i) {
    if (eta[i] != 1 && eta[i] != -1)
      fail(ErrorCode::InvalidArgument, "relaxed signature entries are +1 or -1");
    bool free = kinds[i] == PunctureKind::cusp && I[i] != 0.0;
    if (!free && eta[i] != lam.sigma[i])
      fail(ErrorCode::InvalidLamination,
           "eta_" + std::to_string(i) + " must equal sigma_" + std::to_string(i) +
               " unless the lamination enters a cusp there");
  }
}

double intersection_spectrum(const std::string& curve, const Lamination& lam) {
  if (curve.empty()) fail(ErrorCode::UnsupportedCurve, "empty curve name");
  std::size_t primes = 0;
  while (primes < curve.size() && curve[curve.size() - 1 - primes] == '\'') ++primes;
  std::string stem = curve.substr(0, curve.size() - primes);
  CurveRef ref;
  try {
    ref = CurveRef::parse(stem);
  } catch (const Error&) {
    fail(ErrorCode::UnsupportedCurve, "curve '" + curve + "' is not in the dictionary");
  }
  if (primes > 2 || (ref.boundary && primes > 0))
    fail(ErrorCode::UnsupportedCurve, "curve '" + curve + "' is not in the dictionary");
  if (ref.boundary) {
    if (ref.index >= lam.punctures)
      fail(ErrorCode::UnsupportedCurve, "no boundary curve " + curve);
    return measure_spectrum_peripheral(lam)[ref.index];
  }
  if (lam.family != LamFamily::multicurve)
    fail(ErrorCode::UnsupportedCurve,
         "pant curve spectra are only available for multicurve laminations");
  const PantDecomposition& pd = *lam.pd;
  if (ref.index >= pd.interior) fail(ErrorCode::UnsupportedCurve, "no pant curve " + curve);
  if (primes == 0) return 0.0;
  const auto& sl = pd.interior_slots[ref.index];
  double crossings = sl[0].pant == sl[1].pant ? 1.0 : 2.0;
  return crossings * lam.weights[ref.index];
}

double enhanced_spectrum(const EnhancedLam& lam, int i) {
  return lam.eta.at(i) * measure_spectrum_peripheral(lam.lam).at(i);
}

EnhancedLam reflect(const EnhancedLam& lam, int i) {
  if (i < 0 || i >= lam.lam.punctures)
    fail(ErrorCode::InvalidArgument, "no puncture " + std::to_string(i));
  EnhancedLam out = lam;
  double I = measure_spectrum_peripheral(lam.lam)[i];
  if (lam.kinds[i] == PunctureKind::boundary && I != 0.0) {
    out.lam.sigma[i] = -out.lam.sigma[i];
    out.eta[i] = -out.eta[i];
  }
  return out;
}

bool in_V_c(const std::vector<double>& boundary_lengths, const Lamination& lam) {
  if (static_cast<int>(boundary_lengths.size()) != lam.punctures)
    fail(ErrorCode::DimensionMismatch, "boundary length count differs from punctures");
  auto I = measure_spectrum_peripheral(lam);
  for (int i = 0; i < lam.punctures; ++i)
    if (boundary_lengths[i] > 0 && !(I[i] < boundary_lengths[i])) return false;
  return true;
}

// ---- realization -------------------------------------------------------------

int default_lift_depth(int rank) {
  if (rank <= 2) return 12;
  if (rank == 3) return 9;
  return 7;
}

namespace {

struct Seed {
  Geodesic g;
  Vec3 normal;
  double weight;
  Word stabilizer;  // word of a generator of the leaf's stabilizer, if any
};

bool ends_with(const Word& w, const Word& suffix) {
  return !suffix.empty() && w.size() >= suffix.size() &&
         std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

std::vector<Seed> seeds_of(const Lamination& lam, const Holonomy& h) {
  std::vector<Seed> out;
  const std::vector<Geodesic>* src = nullptr;
  if (lam.family == LamFamily::multicurve) {
    if (h.interior_axes.size() != lam.weights.size())
      fail(ErrorCode::DimensionMismatch,
           "holonomy does not carry the pant curve axes of this lamination");
    src = &h.interior_axes;
  } else {
    if (h.edge_seeds.size() != lam.weights.size())
      fail(ErrorCode::DimensionMismatch,
           "holonomy does not carry the triangulation edges of this lamination");
    src = &h.edge_seeds;
  }
  for (std::size_t k = 0; k < lam.weights.size(); ++k) {
    if (!(lam.weights[k] > 0)) continue;
    Word stab;
    if (lam.family == LamFamily::multicurve) stab = h.interior_words[k];
    out.push_back({(*src)[k], leaf_normal((*src)[k]), lam.weights[k], stab});
  }
  return out;
}

// Position of a boundary point on the circle seen from i, infinity at pi.
double circle_angle(double p) { return std::isinf(p) ? kPi : 2.0 * std::atan(p); }

struct Hit {
  double t1, t2;  // sorted circle angles seen from the ball centre
  WeightedGeodesic w;
};

Hit make_hit(const Geodesic& g, const RMat& chart, double weight, int len) {
  double a = circle_angle(mobius_boundary(chart, g.minus));
  double b = circle_angle(mobius_boundary(chart, g.plus));
  if (a > b) std::swap(a, b);
  WeightedGeodesic w;
  w.leaf = g;
  w.weight = weight;
  w.word_length = len;
  return {a, b, w};
}

std::vector<WeightedGeodesic> merge_hits(std::vector<Hit> hits) {
  std::sort(hits.begin(), hits.end(),
            [](const Hit& x, const Hit& y) { return x.t1 < y.t1; });
  std::vector<Hit> uniq;
  const double tol = 1e-8;
  for (const Hit& h : hits) {
    bool merged = false;
    for (auto it = uniq.rbegin(); it != uniq.rend() && h.t1 - it->t1 < tol; ++it) {
      if (std::abs(h.t2 - it->t2) < tol) {
        it->w.word_length = std::min(it->w.word_length, h.w.word_length);
        merged = true;
        break;
      }
    }
    if (!merged) uniq.push_back(h);
  }
  std::vector<WeightedGeodesic> out;
  for (auto& h : uniq) out.push_back(h.w);
  return out;
}

// Enumerate lifts g * seed whose distance to `center` is below `radius`.
std::vector<WeightedGeodesic> enumerate(const Lamination& lam, const Holonomy& h,
                                        cplx center, double radius, int depth) {
  std::vector<Seed> seeds = seeds_of(lam, h);
  std::vector<Hit> hits;
  if (seeds.empty()) return {};
  double bound = std::sinh(radius);
  RMat chart = normalized(RMat{1, -center.real(), 0, center.imag()});
  // Words ending in a stabilizer power repeat a shorter lift with amplified
  // rounding error, so they are skipped.
  auto test = [&](const Word& w, const RMat& g) {
    cplx c = mobius(g.adj(), center);
    Vec3 hc = hyperboloid(c);
    for (const Seed& s : seeds) {
      if (ends_with(w, s.stabilizer) || ends_with(w, inverse(s.stabilizer))) continue;
      if (std::abs(minkowski(hc, s.normal)) < bound)
        hits.push_back(make_hit(mobius(g, s.g), chart, s.weight, static_cast<int>(w.size())));
    }
  };
  test(Word{}, RMat::identity());
  for_each_reduced<RMat>(h.rank(), depth, h.gens, RMat::identity(),
                         [&](const Word& w, const RMat& g) {
                           test(w, g);
                           return true;
                         });
  return merge_hits(std::move(hits));
}

LiftFamily filter_segment(const std::vector<WeightedGeodesic>& lifts, cplx x, cplx y,
                          bool allow_endpoints, int depth) {
  LiftFamily out;
  out.depth = depth;
  Vec3 X = hyperboloid(x), Y = hyperboloid(y);
  double d = hyp_distance(x, y);
  double tol = std::sinh(kLeafTol);
  for (const WeightedGeodesic& w : lifts) {
    Vec3 n = leaf_normal(w.leaf);
    double a = minkowski(X, n), b = minkowski(Y, n);
    bool on_x = std::abs(a) < tol, on_y = std::abs(b) < tol;
    if (on_x && on_y) continue;  // segment runs along the leaf, or x == y on it
    if ((on_x || on_y) && !allow_endpoints)
      fail(ErrorCode::BasePointOnLeaf, "segment endpoint lies on a lamination leaf");
    WeightedGeodesic c = w;
    if (on_x) {
      c.endpoint = -1;
      c.position = 0.0;
      if (b > 0) c.leaf = c.leaf.reversed();
    } else if (on_y) {
      c.endpoint = 1;
      c.position = d;
      if (a < 0) c.leaf = c.leaf.reversed();
    } else if ((a > 0) != (b > 0)) {
      if (a < 0) {
        c.leaf = c.leaf.reversed();
        a = -a;
        b = -b;
      }
      double th = a * std::sinh(d) / (a * std::cosh(d) - b);
      c.position = std::atanh(std::clamp(th, -1.0, 1.0));
    } else {
      continue;
    }
    out.leaves.push_back(c);
    if (c.word_length >= depth) out.converged = false;
  }
  std::sort(out.leaves.begin(), out.leaves.end(),
            [](const WeightedGeodesic& p, const WeightedGeodesic& q) {
              return p.position < q.position;
            });
  return out;
}

}  // namespace

LiftCache::LiftCache(const Lamination& lam, const Holonomy& h, cplx center,
                     double radius, int depth)
    : center_(center), radius_(radius), depth_(depth > 0 ? depth : default_lift_depth(h.rank())) {
  if (!(radius > 0)) fail(ErrorCode::InvalidArgument, "cache radius must be positive");
  lifts_ = enumerate(lam, h, center, radius, depth_);
  for (const auto& w : lifts_)
    if (w.word_length >= depth_) converged_ = false;
}

bool LiftCache::contains(cplx z) const { return hyp_distance(z, center_) < radius_; }

LiftFamily LiftCache::crossing(cplx x, cplx y, bool allow_endpoints) const {
  if (!contains(x) || !contains(y))
    fail(ErrorCode::OutOfDomain, "segment leaves the cached ball");
  return filter_segment(lifts_, x, y, allow_endpoints, depth_);
}

LiftFamily realize_lifts(const Lamination& lam, const Holonomy& h, cplx x, cplx y,
                         int depth, bool allow_endpoints) {
  if (depth <= 0) depth = default_lift_depth(h.rank());
  double d = hyp_distance(x, y);
  // Midpoint of the segment; every leaf crossing it meets this ball.
  cplx mid = x;
  if (d > 0) {
    Vec3 X = hyperboloid(x), Y = hyperboloid(y);
    Vec3 M = (X + Y) / std::sqrt(-minkowski(X + Y, X + Y));
    mid = from_hyperboloid(M);
  }
  auto lifts = enumerate(lam, h, mid, 0.5 * d + 1e-6, depth);
  return filter_segment(lifts, x, y, allow_endpoints, depth);
}

void check_disjoint(const std::vector<WeightedGeodesic>& leaves) {
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (geodesics_cross(leaves[i].leaf, leaves[j].leaf))
        fail(ErrorCode::InvalidLamination, "realized leaves cross");
}

}  // namespace mgh
