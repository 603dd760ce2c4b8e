#pragma once
// 2x2 matrix groups acting on H^2 (upper half-plane), H^3 (upper half-space)
// and on PSL(2,R) viewed as anti-de Sitter space.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "mgh/error.hpp"

namespace mgh {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kClassTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

template <class T>
struct Mat2 {
  T a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  // Adjugate; equals the inverse for unit determinant.
  Mat2 adj() const { return {d, -b, -c, a}; }
  Mat2 inverse() const {
    T D = det();
    return {d / D, -b / D, -c / D, a / D};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
  }
  Mat2 operator-(const Mat2& o) const {
    return {a - o.a, b - o.b, c - o.c, d - o.d};
  }
  Mat2 operator*(T s) const { return {a * s, b * s, c * s, d * s}; }
  double norm_max() const {
    using std::abs;
    return std::max(std::max(abs(a), abs(b)), std::max(abs(c), abs(d)));
  }
};

using RMat = Mat2<double>;
using CMat = Mat2<cplx>;

CMat complexify(const RMat& m);

// Divide by a square root of the determinant. Real matrices must have
// positive determinant (orientation preserving).
RMat normalized(const RMat& m);
CMat normalized(const CMat& m);

// Projective equality: accepts M and -M.
bool proj_equal(const RMat& m, const RMat& n, double tol = 1e-10);
bool proj_equal(const CMat& m, const CMat& n, double tol = 1e-10);
double proj_distance(const RMat& m, const RMat& n);
double proj_distance(const CMat& m, const CMat& n);

// Exponential of a 2x2 matrix (closed form through the trace-free part).
RMat expm(const RMat& x);
CMat expm(const CMat& x);

// Moebius action. Boundary points are extended reals with +inf for the
// point at infinity.
cplx mobius(const RMat& g, cplx z);
double mobius_boundary(const RMat& g, double x);

enum class IsomKind { identity, elliptic, parabolic, hyperbolic };
const char* kind_name(IsomKind k);

struct IsomClass {
  IsomKind kind = IsomKind::identity;
  double trace = 2.0;  // |tr| after normalization
  // hyperbolic: translation length 2 acosh(|tr|/2)
  double translation_length = 0.0;
  // elliptic: counterclockwise rotation angle in (0, 2pi), read from the
  // derivative at the interior fixed point
  double rotation_angle = 0.0;
  // hyperbolic: (attracting, repelling); parabolic: both equal
  double fixed_attracting = 0.0;
  double fixed_repelling = 0.0;
  cplx interior_fixed{0.0, 0.0};  // elliptic only
};

IsomClass classify(const RMat& g, double tol = kClassTol);
double translation_length(const RMat& g, double tol = kClassTol);
std::pair<double, double> fixed_points(const RMat& g, double tol = kClassTol);

struct Geodesic {
  double minus = 0.0;  // p-
  double plus = kInf;  // p+
  Geodesic reversed() const { return {plus, minus}; }
};

Geodesic axis(const RMat& g, double tol = kClassTol);
Geodesic mobius(const RMat& g, const Geodesic& l);
bool same_geodesic(const Geodesic& l, const Geodesic& m, double tol = 1e-9);
bool same_unoriented(const Geodesic& l, const Geodesic& m, double tol = 1e-9);
// Two geodesics cross transversally iff their endpoints interleave.
bool geodesics_cross(const Geodesic& l, const Geodesic& m, double tol = 1e-12);

// Involution K with K^2 = Id whose exponential translates along l:
// exp(tK) has translation length 2t towards p+.
RMat involution(const Geodesic& l);
// Unit-displacement generator: exp(a * unit_generator(l)) translates by a.
RMat unit_generator(const Geodesic& l);
RMat translation(const Geodesic& l, double a);
// Rotation generator for l viewed inside H^3: exp(2 pi X) = -Id.
CMat rotation_generator(const Geodesic& l);

// ---- Hyperboloid model, signature (-,+,+) --------------------------------
double minkowski(const Vec3& u, const Vec3& v);
Vec3 hyperboloid(cplx z);
cplx from_hyperboloid(const Vec3& x);
Vec3 boundary_null(double p);
// Unit spacelike normal of l, positive on the left of the oriented leaf.
Vec3 leaf_normal(const Geodesic& l);
// Linear action on R^{2,1}; preserves the Minkowski form.
Mat3 so21(const RMat& g);

double hyp_distance(cplx z, cplx w);
// Signed distance; positive on the left of the oriented geodesic.
double signed_distance(const Geodesic& l, cplx z);
cplx point_on_geodesic(const Geodesic& l, double s);  // s: arc length from the
                                                      // top-most point

// ---- Upper half-space H^3 ---------------------------------------------------
struct H3Point {
  cplx z;    // horizontal coordinate
  double t;  // height > 0
};
H3Point mobius(const CMat& g, const H3Point& p);
H3Point h3_inclusion(cplx z);  // vertical half-plane over R
Vec4 h3_to_minkowski(const H3Point& p);
double h3_distance(const H3Point& p, const H3Point& q);
double minkowski4(const Vec4& u, const Vec4& v);

// ---- Anti-de Sitter space as PSL(2,R) --------------------------------------
enum class Causal { coincident, timelike, lightlike, spacelike };
const char* causal_name(Causal c);

// Bilinear form with <X,X> = -det X on M(2,R).
double ads_inner(const RMat& p, const RMat& q);
// Trace criterion on tr(P^{-1} Q).
Causal causal_type(const RMat& p, const RMat& q, double tol = kClassTol);
using CausalOracle = std::function<Causal(const RMat&, const RMat&)>;

// Point of the plane P(Id) lying over z: the rotation by pi around z.
RMat point_matrix(cplx z);
cplx point_from_matrix(const RMat& p);

// Isometry of AdS acting by x -> plus * x * minus^{-1}.
struct AdSIsometry {
  RMat minus = RMat::identity();
  RMat plus = RMat::identity();
  RMat apply(const RMat& x) const { return plus * x * minus.inverse(); }
  AdSIsometry operator*(const AdSIsometry& o) const {
    return {minus * o.minus, plus * o.plus};
  }
  AdSIsometry inverse() const { return {minus.inverse(), plus.inverse()}; }
};

// Dual line of a geodesic of P(Id): t -> exp(t K), through Id.
struct DualGeodesic {
  Geodesic l;
  RMat generator;  // K = 2 * unit_generator(l)
  RMat point(double s) const;
  // Positive rotation around l by parameter t: (exp(-tK), exp(tK)).
  AdSIsometry rotation(double t) const;
};
DualGeodesic dual_geodesic(const Geodesic& l);

}  // namespace mgh
