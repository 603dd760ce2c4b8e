#pragma once
// Finite-difference Riemann tensor of a metric given as a function of
// coordinates. Central differences with one Richardson step at each level.

#include <Eigen/Dense>
#include <functional>

namespace mgh {

using MetricFunction = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

struct CurvatureOptions {
  double h = 1e-3;
  bool richardson = true;
};

// R_{lkij} = g_{lm} R^m_{kij} with R(d_i, d_j) d_k = R^m_{kij} d_m, stored as
// a flattened n^4 array indexed ((l*n + k)*n + i)*n + j.
std::vector<double> riemann_lower(const MetricFunction& g, const Eigen::VectorXd& p,
                                  const CurvatureOptions& opt = {});

// Sectional curvature of the plane spanned by X and Y (non-degenerate).
double sectional_curvature(const MetricFunction& g, const Eigen::VectorXd& p,
                           const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                           const CurvatureOptions& opt = {});

// Largest orthonormal-frame component of R - k (g g - g g); zero exactly for
// constant curvature k.
double constant_curvature_residual(const MetricFunction& g, const Eigen::VectorXd& p,
                                   double k, const CurvatureOptions& opt = {});

}  // namespace mgh
