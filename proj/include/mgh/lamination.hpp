#pragma once
// Finite measured laminations: weighted pant curves and weighted edges of an
// ideal triangulation, their measure spectra, and equivariant realization as
// families of weighted geodesics in the universal cover.

#include <optional>
#include <string>
#include <vector>

#include "mgh/teich.hpp"

namespace mgh {

enum class LamFamily { multicurve, triangulation };

struct Lamination {
  LamFamily family = LamFamily::multicurve;
  std::vector<double> weights;  // per z_j or per edge
  std::vector<int> sigma;       // spiraling signature, per puncture
  int punctures = 0;
  std::optional<PantDecomposition> pd;
  std::optional<Triangulation> tri;

  static Lamination multicurve(const PantDecomposition& pd, std::vector<double> w);
  // An empty sigma defaults to +1 everywhere.
  static Lamination triangulation(const Triangulation& tri, std::vector<double> w,
                                  std::vector<int> sigma = {});
  bool empty() const;
  Lamination scaled(double t) const;
};

// Spiraling signature induced by the shear signs: sign0(s(p_i)).
std::vector<int> shear_signature(const ShearPoint& x);

struct EnhancedLam {
  Lamination lam;
  std::vector<int> eta;
  std::vector<PunctureKind> kinds;

  // Rejects eta_i != sigma_i where the relaxed signature is not free.
  static EnhancedLam make(Lamination lam, std::vector<int> eta,
                          std::vector<PunctureKind> kinds);
  void validate() const;
};

// I_{C_i}(lambda) for every puncture.
std::vector<double> measure_spectrum_peripheral(const Lamination& lam);

// I_gamma(lambda) for gamma in {C_i, z_j, z_j', z_j''}.
double intersection_spectrum(const std::string& curve, const Lamination& lam);

double enhanced_spectrum(const EnhancedLam& lam, int i);

// Reflection along C_i.
EnhancedLam reflect(const EnhancedLam& lam, int i);

// I_{C_i} < l_{C_i} on every geodesic boundary component.
bool in_V_c(const std::vector<double>& boundary_lengths, const Lamination& lam);

// ---- realization -------------------------------------------------------------

struct WeightedGeodesic {
  // Oriented so that the start of the query segment lies on its left.
  Geodesic leaf;
  double weight = 0.0;
  double position = 0.0;  // arc length from the segment start to the crossing
  int endpoint = 0;       // -1 through the start, +1 through the end, else 0
  int word_length = 0;    // shortest word found producing this lift
};

struct LiftFamily {
  std::vector<WeightedGeodesic> leaves;  // ordered along the segment
  int depth = 0;
  bool converged = true;
};

// Default enumeration depth for the given free rank.
int default_lift_depth(int rank);

inline constexpr double kLeafTol = 1e-9;

// All lifts of weighted leaves meeting a ball of the hyperbolic plane, found
// among translates by reduced words of length <= depth. Queries then filter
// the cached family.
class LiftCache {
 public:
  LiftCache(const Lamination& lam, const Holonomy& h, cplx center, double radius,
            int depth = 0);

  bool contains(cplx z) const;
  // Lifts crossing the segment [x, y]. Leaves through an endpoint raise
  // base-point-on-leaf unless allow_endpoints is set.
  LiftFamily crossing(cplx x, cplx y, bool allow_endpoints = false) const;

  int depth() const { return depth_; }
  bool converged() const { return converged_; }
  std::size_t size() const { return lifts_.size(); }
  const std::vector<WeightedGeodesic>& lifts() const { return lifts_; }

 private:
  cplx center_;
  double radius_;
  int depth_;
  bool converged_ = true;
  std::vector<WeightedGeodesic> lifts_;
};

// One-shot realization over the segment [x, y].
LiftFamily realize_lifts(const Lamination& lam, const Holonomy& h, cplx x, cplx y,
                         int depth = 0, bool allow_endpoints = false);

// Throws invalid-lamination if two leaves cross.
void check_disjoint(const std::vector<WeightedGeodesic>& leaves);

// Ordered product exp(a_1 X_1) ... exp(a_s X_s) over a realized family, with
// the weight halved for leaves through a segment endpoint. `factor` maps an
// oriented leaf and an effective weight to the group element.
template <class M, class Factor>
M cocycle_product(const LiftFamily& f, const M& one, Factor factor) {
  M out = one;
  for (const WeightedGeodesic& w : f.leaves) {
    double a = w.endpoint != 0 ? 0.5 * w.weight : w.weight;
    out = out * factor(w.leaf, a);
  }
  return out;
}

}  // namespace mgh
