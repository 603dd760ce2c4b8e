#include "mgh/curvature.hpp"

#include <cmath>

#include "mgh/error.hpp"

namespace mgh {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Derivative of a vector-valued function along coordinate i.
template <class F>
VectorXd partial(const F& f, const VectorXd& p, int i, const CurvatureOptions& opt) {
  auto central = [&](double h) {
    VectorXd a = p, b = p;
    a[i] += h;
    b[i] -= h;
    return VectorXd((f(a) - f(b)) / (2 * h));
  };
  if (!opt.richardson) return central(opt.h);
  return VectorXd((4 * central(0.5 * opt.h) - central(opt.h)) / 3);
}

VectorXd flatten(const MatrixXd& m) {
  return Eigen::Map<const VectorXd>(m.data(), m.size());
}

// Christoffel symbols Gamma^k_{ij}, flattened (k*n + i)*n + j.
VectorXd christoffel(const MetricFunction& g, const VectorXd& p, const CurvatureOptions& opt) {
  const int n = static_cast<int>(p.size());
  MatrixXd G = g(p);
  MatrixXd Ginv = G.inverse();
  std::vector<MatrixXd> dG(n);
  for (int i = 0; i < n; ++i) {
    VectorXd d = partial([&](const VectorXd& q) { return flatten(g(q)); }, p, i, opt);
    dG[i] = Eigen::Map<MatrixXd>(d.data(), n, n);
  }
  VectorXd out = VectorXd::Zero(n * n * n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int l = 0; l < n; ++l)
          s += Ginv(k, l) * (dG[i](j, l) + dG[j](i, l) - dG[l](i, j));
        out[(k * n + i) * n + j] = 0.5 * s;
      }
  return out;
}

}  // namespace

std::vector<double> riemann_lower(const MetricFunction& g, const VectorXd& p,
                                  const CurvatureOptions& opt) {
  const int n = static_cast<int>(p.size());
  if (n < 2) fail(ErrorCode::InvalidArgument, "curvature needs dimension >= 2");
  auto gam = [&](const VectorXd& q) { return christoffel(g, q, opt); };
  VectorXd G0 = gam(p);
  std::vector<VectorXd> dG(n);
  for (int i = 0; i < n; ++i) dG[i] = partial(gam, p, i, opt);
  auto C = [&](int k, int i, int j) { return G0[(k * n + i) * n + j]; };
  auto dC = [&](int d, int k, int i, int j) { return dG[d][(k * n + i) * n + j]; };

  // R^l_{kij} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
  //           + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik}
  std::vector<double> up(n * n * n * n, 0.0);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = dC(i, l, j, k) - dC(j, l, i, k);
          for (int m = 0; m < n; ++m) s += C(l, i, m) * C(m, j, k) - C(l, j, m) * C(m, i, k);
          up[((l * n + k) * n + i) * n + j] = s;
        }
  MatrixXd M = g(p);
  std::vector<double> low(up.size(), 0.0);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0;
          for (int m = 0; m < n; ++m) s += M(l, m) * up[((m * n + k) * n + i) * n + j];
          low[((l * n + k) * n + i) * n + j] = s;
        }
  return low;
}

double sectional_curvature(const MetricFunction& g, const VectorXd& p, const VectorXd& X,
                           const VectorXd& Y, const CurvatureOptions& opt) {
  const int n = static_cast<int>(p.size());
  auto R = riemann_lower(g, p, opt);
  MatrixXd M = g(p);
  // K = <R(X,Y)Y, X> / (<X,X><Y,Y> - <X,Y>^2)
  double num = 0;
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          num += R[((l * n + k) * n + i) * n + j] * X[l] * Y[k] * X[i] * Y[j];
  double xx = X.dot(M * X), yy = Y.dot(M * Y), xy = X.dot(M * Y);
  double den = xx * yy - xy * xy;
  if (std::abs(den) < 1e-14) fail(ErrorCode::InvalidArgument, "degenerate plane");
  return num / den;
}

double constant_curvature_residual(const MetricFunction& g, const VectorXd& p, double k,
                                   const CurvatureOptions& opt) {
  const int n = static_cast<int>(p.size());
  auto R = riemann_lower(g, p, opt);
  MatrixXd M = g(p);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(M);
  MatrixXd E(n, n);
  VectorXd eta(n);
  for (int a = 0; a < n; ++a) {
    double ev = es.eigenvalues()[a];
    if (std::abs(ev) < 1e-14) fail(ErrorCode::InvalidArgument, "degenerate metric");
    E.col(a) = es.eigenvectors().col(a) / std::sqrt(std::abs(ev));
    eta[a] = ev > 0 ? 1.0 : -1.0;
  }
  // Components in the orthonormal frame.
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double s = 0;
          for (int l = 0; l < n; ++l)
            for (int kk = 0; kk < n; ++kk)
              for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                  s += R[((l * n + kk) * n + i) * n + j] * E(l, a) * E(kk, b) * E(i, c) *
                       E(j, d);
          // R_{abcd} = k (eta_ad eta_bc - eta_bd eta_ac) in this index order
          double model = k * ((a == c && b == d ? eta[a] * eta[b] : 0.0) -
                              (a == d && b == c ? eta[a] * eta[b] : 0.0));
          worst = std::max(worst, std::abs(s - model));
        }
  return worst;
}

}  // namespace mgh
