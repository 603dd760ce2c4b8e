#pragma once
// Bending cocycles: PSL(2,C)-valued for pleated surfaces in H^3 and
// PSL(2,R)xPSL(2,R)-valued for bent surfaces in anti-de Sitter space.

#include "mgh/lamination.hpp"

namespace mgh {

struct BendContext {
  BendContext(const Lamination& lam, const Holonomy& h, cplx x0, double radius,
              int depth = 0);
  cplx x0;
  LiftCache cache;
};

CMat bend_cocycle_hyp(const LiftFamily& lifts);
CMat bend_cocycle_hyp(const BendContext& ctx, cplx x, cplx y);
H3Point bend_map_hyp(const BendContext& ctx, cplx x);

// (B_-, B_+) = (prod exp(-a_i X_i / 2), prod exp(a_i X_i / 2)).
AdSIsometry bend_cocycle_ads(const LiftFamily& lifts);
AdSIsometry bend_cocycle_ads(const BendContext& ctx, cplx x, cplx y);
// B(x0, x) applied to the point of P(Id) over x.
RMat bend_map_ads(const BendContext& ctx, cplx x);

struct ComplexHolonomy {
  Holonomy base;
  std::vector<CMat> gens;
  int depth = 0;
  bool converged = true;
  CMat eval(const Word& w) const;
};

struct AdSHolonomy {
  Holonomy left;   // plus components
  Holonomy right;  // minus components
  int depth = 0;
  bool converged = true;
  AdSIsometry eval(const Word& w) const;
};

ComplexHolonomy hyp_holonomy(const Holonomy& h, const Lamination& lam, int depth = 0);
AdSHolonomy ads_holonomy(const Holonomy& h, const Lamination& lam, int depth = 0);

}  // namespace mgh
