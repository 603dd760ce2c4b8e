#pragma once
// Left and right earthquakes: in Fenchel-Nielsen and shear coordinates, as a
// cocycle over a realized lamination, and as the enhanced quake flow on
// peripheral data.

#include <vector>

#include "mgh/lamination.hpp"

namespace mgh {

enum class QuakeSide { left, right };

FNPoint quake_coordinates(const FNPoint& F, const Lamination& lam, QuakeSide side);
ShearPoint quake_shear(const ShearPoint& F, const Lamination& lam, QuakeSide side);

// Ordered product of exp(+-a_i Xhat_i) over the crossed leaves.
RMat quake_cocycle(const LiftFamily& lifts, QuakeSide side);
RMat quake_cocycle(const LiftCache& cache, cplx x, cplx y, QuakeSide side);

struct DeformedHolonomy {
  Holonomy h;
  int depth = 0;
  bool converged = true;
};

// gamma -> B(x0, gamma x0) gamma on every generator.
DeformedHolonomy quake_holonomy(const Holonomy& h, const Lamination& lam, QuakeSide side,
                                int depth = 0);

// Radius of a ball around the base point containing every generator
// segment [x0, g x0], with a margin.
double generator_radius(const Holonomy& h);

// Peripheral data of the enhanced quake flow. The state keeps its origin and
// the elapsed time; all fields at time t are closed-form in those.
class FlowState {
 public:
  static FlowState make(const EnhancedPoint& F, const EnhancedLam& lam);
  static FlowState make(std::vector<double> length, std::vector<int> eps,
                        std::vector<double> I, std::vector<int> eta);

  double time() const { return t_; }
  int punctures() const { return static_cast<int>(l0_.size()); }

  double length(int i) const;           // l_{C_i}(t)
  double enhanced_length(int i) const;  // eps_i(t) l_{C_i}(t)
  int eps(int i) const;
  int eta(int i) const;
  int sigma(int i) const;               // spiraling sign of the flowed lamination
  bool cusp(int i) const;               // l_{C_i}(t) == 0
  double spectrum(int i) const { return I_[i]; }
  // eps_i eta_i I_{C_i}; constant along the flow.
  double enhanced_spectrum(int i) const;
  // Time t_i = l_{C_i}(0) / I_{C_i} at which C_i becomes a cusp; +inf if the
  // length never vanishes for t > 0.
  double critical_time(int i) const;

  FlowState advanced(double dt) const;

 private:
  std::vector<double> l0_;
  std::vector<int> eps0_;
  std::vector<double> I_;
  std::vector<int> eta0_;
  double t_ = 0.0;
  double signed_gap(int i) const;  // l0 - t eta0 I
};

// beta_t^#; t must be >= 0.
FlowState quake_flow(const FlowState& s, double t);

bool quake_compatible(const std::vector<double>& l0, const std::vector<int>& sigma0,
                      const std::vector<double>& l1, const std::vector<int>& sigma1);

// Multicurve lambda with quake_coordinates(F0, lambda, left) = F1 when F0 and
// F1 differ only by nonnegative twists.
Lamination solve_twist_earthquake(const PantDecomposition& pd, const FNPoint& F0,
                                  const FNPoint& F1);

}  // namespace mgh
