#pragma once
// Teichmueller coordinates of finite-type surfaces: Fenchel-Nielsen data on a
// pant decomposition, shear data on an ideal triangulation, and the explicit
// holonomy representations they determine.

#include <array>
#include <string>
#include <vector>

#include "mgh/isometry.hpp"
#include "mgh/words.hpp"

namespace mgh {

enum class PunctureKind { cusp, boundary };

struct SurfaceType {
  int genus = 0;
  int punctures = 0;
  std::vector<PunctureKind> kinds;

  int euler_characteristic() const { return 2 - 2 * genus - punctures; }
  int interior_curves() const { return 3 * genus - 3 + punctures; }
  int pants() const { return 2 * genus + punctures - 2; }
  int triangulation_edges() const { return 6 * genus - 6 + 3 * punctures; }
  void validate() const;
};

// Sign convention where the sign of 0 is +1.
inline int sign0(double x) { return x < 0 ? -1 : 1; }

// ---- Pant decompositions ----------------------------------------------------

struct CurveRef {
  bool boundary = false;  // C_i when true, z_j otherwise
  int index = 0;
  std::string str() const;
  static CurveRef parse(const std::string& s);
  bool operator==(const CurveRef& o) const {
    return boundary == o.boundary && index == o.index;
  }
};

struct Slot {
  int pant = 0;
  int cuff = 0;  // 0, 1, 2 in the pant's cyclic order
};

struct PantDecomposition {
  std::vector<std::array<CurveRef, 3>> pants;
  int genus = 0;
  int punctures = 0;
  int interior = 0;
  std::vector<std::array<Slot, 2>> interior_slots;  // per z_j
  std::vector<Slot> boundary_slots;                 // per C_i

  // Validates slot usage and connectivity and derives the genus.
  static PantDecomposition make(std::vector<std::array<CurveRef, 3>> pants);
  // Standard decompositions used throughout the tests and examples.
  static PantDecomposition once_punctured_torus();   // (z0 z0 C0)
  static PantDecomposition four_punctured_sphere();  // (C0 C1 z0)(z0 C2 C3)
  static PantDecomposition three_punctured_sphere(); // (C0 C1 C2)
};

struct FNPoint {
  std::vector<double> boundary;  // l_{C_i} >= 0, 0 encodes a cusp
  std::vector<double> length;    // l_{z_j} > 0
  std::vector<double> twist;     // t_{z_j}
  int dimension() const;
};

// ---- Ideal triangulations ---------------------------------------------------

struct Triangulation {
  // Each triangle lists its three edge ids counterclockwise; side k runs from
  // vertex k to vertex k+1 and gluing reverses the side orientation.
  std::vector<std::array<int, 3>> triangles;
  int edges = 0;
  int vertices = 0;
  int genus = 0;
  // For every edge its two occurrences (triangle, side).
  std::vector<std::array<std::array<int, 2>, 2>> occurrences;
  // corner_vertex[t][k]: puncture index of vertex k of triangle t.
  std::vector<std::array<int, 3>> corner_vertex;

  static Triangulation make(std::vector<std::array<int, 3>> triangles);
  static Triangulation once_punctured_torus();    // (0,1,2)(0,1,2)
  static Triangulation three_punctured_sphere();  // (0,1,2)(0,2,1)

  // Opposite side of (t, k).
  std::array<int, 2> across(int t, int k) const;
  // Edges met by the peripheral loop around puncture i, with multiplicity.
  std::vector<int> star(int i) const;
};

struct ShearPoint {
  Triangulation tri;
  std::vector<double> s;  // one per edge
  // s(p_i): sum of shears over the star of p_i.
  double star_sum(int i) const;
};

struct EnhancedPoint {
  std::vector<double> boundary;  // l_{C_i}
  std::vector<int> eps;          // +1 forced at cusps

  static EnhancedPoint from_fn(const FNPoint& x, std::vector<int> eps);
  static EnhancedPoint from_shear(const ShearPoint& x);
  void validate() const;
};

// l#_{C_i} = eps_i * l_{C_i}
double enhanced_length(const EnhancedPoint& f, int i);

// ---- Holonomy ---------------------------------------------------------------

struct NamedCurve {
  std::string name;
  Word word;
};

// A representation of pi_1(S, x0) given on a generating set, together with
// the geometric data needed to realize laminations: the axes of the pant
// curves and one developed lift of each triangulation edge.
struct Holonomy {
  std::vector<RMat> gens;
  std::vector<std::string> gen_names;
  std::vector<Word> relators;  // empty for punctured surfaces
  std::vector<Word> peripheral;             // per C_i
  std::vector<NamedCurve> dictionary;       // C_i, z_j, z'_j, z''_j or a, b...
  std::vector<Word> interior_words;         // per z_j, oriented slot word
  std::vector<Geodesic> interior_axes;      // axis of h(z_j), P on its left
  std::vector<Geodesic> edge_seeds;         // per triangulation edge
  cplx base_point{0.0, 1.0};
  SurfaceType type;

  int rank() const { return static_cast<int>(gens.size()); }
  RMat eval(const Word& w) const;
  const Word& curve(const std::string& name) const;
  bool has_curve(const std::string& name) const;
  // Same words and geometry with new generator matrices.
  Holonomy with_generators(std::vector<RMat> g) const;
};

Holonomy holonomy_from_fn(const PantDecomposition& pd, const FNPoint& x);
Holonomy holonomy_from_shear(const ShearPoint& x);

// 2 acosh(|tr|/2) of the peripheral element; 0 when parabolic.
double boundary_length(const Holonomy& h, int i);
double curve_length(const Holonomy& h, const Word& w);
SurfaceType surface_type(const Holonomy& h);

// Explicit pant group for boundary lengths (l1, l2, l3); zero means cusp.
std::array<RMat, 3> pant_group(double l1, double l2, double l3);

}  // namespace mgh
