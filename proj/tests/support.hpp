#pragma once
// Shared random generators and small oracles for the test binaries.

#include <cmath>
#include <random>

#include "mgh/isometry.hpp"

namespace mgh::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  // Random element of SL(2,R) with entries of moderate size.
  RMat sl2(double spread = 1.5) {
    double t = uniform(-spread, spread);
    double th = uniform(0, 2 * kPi);
    double ph = uniform(0, 2 * kPi);
    RMat k1{std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
    RMat k2{std::cos(ph), -std::sin(ph), std::sin(ph), std::cos(ph)};
    RMat a{std::exp(t / 2), 0, 0, std::exp(-t / 2)};
    return k1 * a * k2;
  }
  RMat hyperbolic(double min_len = 0.2, double max_len = 4.0) {
    double l = uniform(min_len, max_len);
    RMat a{std::exp(l / 2), 0, 0, std::exp(-l / 2)};
    RMat h = sl2();
    return h * a * h.inverse();
  }
  RMat elliptic() {
    double th = uniform(0.1, kPi - 0.1);
    RMat r{std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
    RMat h = sl2();
    return h * r * h.inverse();
  }
  cplx point(double box = 1.5) {
    return {uniform(-box, box), std::exp(uniform(-1.0, 1.0))};
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Brute-force causal classification of the projective line through P, Q:
// sample det(sP + tQ) on the unit circle of (s, t).
inline Causal causal_bruteforce(const RMat& pin, const RMat& qin) {
  RMat p = normalized(pin), q = normalized(qin);
  if (proj_equal(p, q, 1e-9)) return Causal::coincident;
  double mn = 1e300, mx = -1e300;
  const int n = 20000;
  for (int k = 0; k < n; ++k) {
    double th = kPi * k / n;
    RMat m = p * std::cos(th) + q * std::sin(th);
    double d = m.det();
    mn = std::min(mn, d);
    mx = std::max(mx, d);
  }
  double scale = std::max(std::abs(mn), std::abs(mx));
  if (mn > 1e-6 * scale) return Causal::timelike;
  if (mn > -1e-6 * scale) return Causal::lightlike;
  return Causal::spacelike;
}

}  // namespace mgh::testing
