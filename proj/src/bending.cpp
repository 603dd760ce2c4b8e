#include "mgh/bending.hpp"

#include "mgh/earthquake.hpp"

namespace mgh {

BendContext::BendContext(const Lamination& lam, const Holonomy& h, cplx x0_, double radius,
                         int depth)
    : x0(x0_), cache(lam, h, x0_, radius, depth) {
  Vec3 X = hyperboloid(x0);
  for (const auto& w : cache.lifts())
    if (std::abs(minkowski(X, leaf_normal(w.leaf))) < std::sinh(kLeafTol))
      fail(ErrorCode::BasePointOnLeaf, "bending base point lies on a leaf");
}

CMat bend_cocycle_hyp(const LiftFamily& lifts) {
  check_disjoint(lifts.leaves);
  return cocycle_product(lifts, CMat::identity(), [](const Geodesic& l, double a) {
    return expm(rotation_generator(l) * cplx(a, 0.0));
  });
}

CMat bend_cocycle_hyp(const BendContext& ctx, cplx x, cplx y) {
  return bend_cocycle_hyp(ctx.cache.crossing(x, y, true));
}

H3Point bend_map_hyp(const BendContext& ctx, cplx x) {
  return mobius(bend_cocycle_hyp(ctx, ctx.x0, x), h3_inclusion(x));
}

AdSIsometry bend_cocycle_ads(const LiftFamily& lifts) {
  check_disjoint(lifts.leaves);
  RMat minus = cocycle_product(lifts, RMat::identity(), [](const Geodesic& l, double a) {
    return translation(l, -a);
  });
  RMat plus = cocycle_product(lifts, RMat::identity(), [](const Geodesic& l, double a) {
    return translation(l, a);
  });
  return {minus, plus};
}

AdSIsometry bend_cocycle_ads(const BendContext& ctx, cplx x, cplx y) {
  return bend_cocycle_ads(ctx.cache.crossing(x, y, true));
}

RMat bend_map_ads(const BendContext& ctx, cplx x) {
  return bend_cocycle_ads(ctx, ctx.x0, x).apply(point_matrix(x));
}

CMat ComplexHolonomy::eval(const Word& w) const {
  return evaluate(w, gens, CMat::identity());
}

AdSIsometry AdSHolonomy::eval(const Word& w) const {
  return {right.eval(w), left.eval(w)};
}

ComplexHolonomy hyp_holonomy(const Holonomy& h, const Lamination& lam, int depth) {
  ComplexHolonomy out;
  out.base = h;
  for (const RMat& g : h.gens) out.gens.push_back(complexify(g));
  if (lam.empty()) return out;
  cplx x0 = h.base_point;
  BendContext ctx(lam, h, x0, generator_radius(h), depth);
  out.depth = ctx.cache.depth();
  for (int k = 0; k < h.rank(); ++k) {
    LiftFamily f = ctx.cache.crossing(x0, mobius(h.gens[k], x0));
    out.converged = out.converged && f.converged;
    out.gens[k] = normalized(bend_cocycle_hyp(f) * complexify(h.gens[k]));
  }
  return out;
}

AdSHolonomy ads_holonomy(const Holonomy& h, const Lamination& lam, int depth) {
  AdSHolonomy out{h, h, 0, true};
  if (lam.empty()) return out;
  cplx x0 = h.base_point;
  BendContext ctx(lam, h, x0, generator_radius(h), depth);
  out.depth = ctx.cache.depth();
  for (int k = 0; k < h.rank(); ++k) {
    LiftFamily f = ctx.cache.crossing(x0, mobius(h.gens[k], x0));
    out.converged = out.converged && f.converged;
    AdSIsometry B = bend_cocycle_ads(f);
    out.left.gens[k] = normalized(B.plus * h.gens[k]);
    out.right.gens[k] = normalized(B.minus * h.gens[k]);
  }
  return out;
}

}  // namespace mgh
