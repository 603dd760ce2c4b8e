#include "mgh/teich.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace mgh {

void SurfaceType::validate() const {
  if (genus < 0 || punctures < 0)
    fail(ErrorCode::InvalidStructure, "negative genus or puncture count");
  if (euler_characteristic() >= 0)
    fail(ErrorCode::InvalidStructure,
         "surface of genus " + std::to_string(genus) + " with " +
             std::to_string(punctures) + " punctures is elementary");
  if (static_cast<int>(kinds.size()) != punctures)
    fail(ErrorCode::DimensionMismatch, "puncture kinds do not match count");
}

std::string CurveRef::str() const {
  return (boundary ? "C" : "z") + std::to_string(index);
}

CurveRef CurveRef::parse(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'C' && s[0] != 'z'))
    fail(ErrorCode::Parse, "curve reference '" + s + "' is not C<i> or z<j>");
  CurveRef r;
  r.boundary = s[0] == 'C';
  try {
    std::size_t used = 0;
    r.index = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1 || r.index < 0) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "curve reference '" + s + "' has a bad index");
  }
  return r;
}

// ---- pant decompositions ----------------------------------------------------

PantDecomposition PantDecomposition::make(
    std::vector<std::array<CurveRef, 3>> pants) {
  PantDecomposition pd;
  pd.pants = std::move(pants);
  int np = static_cast<int>(pd.pants.size());
  if (np == 0) fail(ErrorCode::InvalidStructure, "empty pant decomposition");
  int max_c = -1, max_z = -1;
  for (const auto& p : pd.pants)
    for (const CurveRef& c : p)
      (c.boundary ? max_c : max_z) = std::max(c.boundary ? max_c : max_z, c.index);
  pd.punctures = max_c + 1;
  pd.interior = max_z + 1;
  std::vector<std::vector<Slot>> zs(pd.interior), cs(pd.punctures);
  for (int p = 0; p < np; ++p)
    for (int k = 0; k < 3; ++k) {
      const CurveRef& c = pd.pants[p][k];
      (c.boundary ? cs : zs)[c.index].push_back({p, k});
    }
  for (int i = 0; i < pd.punctures; ++i) {
    if (cs[i].size() != 1)
      fail(ErrorCode::InvalidStructure,
           "boundary curve C" + std::to_string(i) + " must occupy exactly one slot");
    pd.boundary_slots.push_back(cs[i][0]);
  }
  for (int j = 0; j < pd.interior; ++j) {
    if (zs[j].size() != 2)
      fail(ErrorCode::InvalidStructure,
           "interior curve z" + std::to_string(j) + " must glue exactly two slots");
    pd.interior_slots.push_back({zs[j][0], zs[j][1]});
  }
  // 2g + r - 2 pants
  int twice_g = np - pd.punctures + 2;
  if (twice_g < 0 || twice_g % 2 != 0)
    fail(ErrorCode::InvalidStructure, "pant count inconsistent with any genus");
  pd.genus = twice_g / 2;
  if (pd.interior != 3 * pd.genus - 3 + pd.punctures)
    fail(ErrorCode::InvalidStructure, "interior curve count inconsistent with type");
  // connectivity of the gluing graph
  std::vector<int> seen(np, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (const auto& sl : pd.interior_slots)
      for (int e = 0; e < 2; ++e)
        if (sl[e].pant == p && !seen[sl[1 - e].pant]) {
          seen[sl[1 - e].pant] = 1;
          queue.push_back(sl[1 - e].pant);
        }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    fail(ErrorCode::InvalidStructure, "pant gluing graph is disconnected");
  SurfaceType t{pd.genus, pd.punctures,
                std::vector<PunctureKind>(pd.punctures, PunctureKind::cusp)};
  t.validate();
  return pd;
}

PantDecomposition PantDecomposition::once_punctured_torus() {
  return make({{CurveRef{false, 0}, CurveRef{false, 0}, CurveRef{true, 0}}});
}

PantDecomposition PantDecomposition::four_punctured_sphere() {
  return make({{CurveRef{true, 0}, CurveRef{true, 1}, CurveRef{false, 0}},
               {CurveRef{false, 0}, CurveRef{true, 2}, CurveRef{true, 3}}});
}

PantDecomposition PantDecomposition::three_punctured_sphere() {
  return make({{CurveRef{true, 0}, CurveRef{true, 1}, CurveRef{true, 2}}});
}

int FNPoint::dimension() const {
  int rh = 0;
  for (double l : boundary) rh += l > 0 ? 1 : 0;
  return static_cast<int>(length.size() + twist.size()) + rh;
}

// ---- triangulations ---------------------------------------------------------

Triangulation Triangulation::make(std::vector<std::array<int, 3>> triangles) {
  Triangulation T;
  T.triangles = std::move(triangles);
  int F = static_cast<int>(T.triangles.size());
  if (F == 0 || F % 2 != 0)
    fail(ErrorCode::MalformedTriangulation, "triangle count must be even and positive");
  int E = 3 * F / 2;
  T.edges = E;
  std::vector<std::vector<std::array<int, 2>>> occ(E);
  for (int t = 0; t < F; ++t)
    for (int k = 0; k < 3; ++k) {
      int e = T.triangles[t][k];
      if (e < 0 || e >= E)
        fail(ErrorCode::MalformedTriangulation,
             "edge id " + std::to_string(e) + " out of range 0.." + std::to_string(E - 1));
      occ[e].push_back({t, k});
    }
  for (int e = 0; e < E; ++e) {
    if (occ[e].size() != 2)
      fail(ErrorCode::MalformedTriangulation,
           "edge " + std::to_string(e) + " must appear exactly twice");
    T.occurrences.push_back({occ[e][0], occ[e][1]});
  }
  // Vertex classes: corner (t,k) -> cross side k -> corner (t', k'+1).
  T.corner_vertex.assign(F, {-1, -1, -1});
  int V = 0;
  for (int t = 0; t < F; ++t)
    for (int k = 0; k < 3; ++k) {
      if (T.corner_vertex[t][k] >= 0) continue;
      int ct = t, ck = k;
      while (T.corner_vertex[ct][ck] < 0) {
        T.corner_vertex[ct][ck] = V;
        auto nb = T.across(ct, ck);
        ct = nb[0];
        ck = (nb[1] + 1) % 3;
      }
      if (ct != t || ck != k)
        fail(ErrorCode::MalformedTriangulation, "corner cycle does not close");
      ++V;
    }
  T.vertices = V;
  int chi = V - E + F;
  if (chi % 2 != 0 || chi > 2)
    fail(ErrorCode::MalformedTriangulation, "triangulation is not a closed orientable surface");
  T.genus = (2 - chi) / 2;
  SurfaceType st{T.genus, V, std::vector<PunctureKind>(V, PunctureKind::cusp)};
  st.validate();
  return T;
}

Triangulation Triangulation::once_punctured_torus() {
  return make({{0, 1, 2}, {0, 1, 2}});
}

Triangulation Triangulation::three_punctured_sphere() {
  return make({{0, 1, 2}, {0, 2, 1}});
}

std::array<int, 2> Triangulation::across(int t, int k) const {
  const auto& oc = occurrences[triangles[t][k]];
  if (oc[0][0] == t && oc[0][1] == k) return oc[1];
  return oc[0];
}

std::vector<int> Triangulation::star(int i) const {
  int F = static_cast<int>(triangles.size());
  for (int t = 0; t < F; ++t)
    for (int k = 0; k < 3; ++k) {
      if (corner_vertex[t][k] != i) continue;
      std::vector<int> out;
      int ct = t, ck = k;
      do {
        out.push_back(triangles[ct][ck]);
        auto nb = across(ct, ck);
        ct = nb[0];
        ck = (nb[1] + 1) % 3;
      } while (ct != t || ck != k);
      return out;
    }
  fail(ErrorCode::InvalidArgument, "no puncture " + std::to_string(i));
}

double ShearPoint::star_sum(int i) const {
  double sum = 0;
  for (int e : tri.star(i)) sum += s.at(e);
  return sum;
}

EnhancedPoint EnhancedPoint::from_fn(const FNPoint& x, std::vector<int> eps) {
  EnhancedPoint f{x.boundary, std::move(eps)};
  if (f.eps.empty()) f.eps.assign(f.boundary.size(), 1);
  f.validate();
  return f;
}

EnhancedPoint EnhancedPoint::from_shear(const ShearPoint& x) {
  EnhancedPoint f;
  for (int i = 0; i < x.tri.vertices; ++i) {
    double s = x.star_sum(i);
    f.boundary.push_back(std::abs(s));
    f.eps.push_back(sign0(s));
  }
  return f;
}

void EnhancedPoint::validate() const {
  if (eps.size() != boundary.size())
    fail(ErrorCode::DimensionMismatch, "signature length differs from puncture count");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] != 1 && eps[i] != -1)
      fail(ErrorCode::InvalidArgument, "signature entries must be +1 or -1");
    if (boundary[i] == 0.0 && eps[i] != 1)
      fail(ErrorCode::InvalidArgument, "cusps carry signature +1");
  }
}

double enhanced_length(const EnhancedPoint& f, int i) {
  return f.eps.at(i) * f.boundary.at(i);
}

// ---- holonomy ---------------------------------------------------------------

RMat Holonomy::eval(const Word& w) const {
  return evaluate(w, gens, RMat::identity());
}

const Word& Holonomy::curve(const std::string& name) const {
  for (const auto& c : dictionary)
    if (c.name == name) return c.word;
  fail(ErrorCode::UnsupportedCurve, "curve '" + name + "' is not in the dictionary");
}

bool Holonomy::has_curve(const std::string& name) const {
  for (const auto& c : dictionary)
    if (c.name == name) return true;
  return false;
}

Holonomy Holonomy::with_generators(std::vector<RMat> g) const {
  if (g.size() != gens.size())
    fail(ErrorCode::DimensionMismatch, "generator count mismatch");
  Holonomy h = *this;
  h.gens = std::move(g);
  return h;
}

double curve_length(const Holonomy& h, const Word& w) {
  IsomClass k = classify(h.eval(w));
  if (k.kind == IsomKind::elliptic)
    fail(ErrorCode::InvalidStructure, "elliptic holonomy on a curve");
  return k.kind == IsomKind::hyperbolic ? k.translation_length : 0.0;
}

double boundary_length(const Holonomy& h, int i) {
  if (i < 0 || i >= static_cast<int>(h.peripheral.size()))
    fail(ErrorCode::InvalidArgument, "no peripheral word for C" + std::to_string(i));
  return curve_length(h, h.peripheral[i]);
}

SurfaceType surface_type(const Holonomy& h) {
  SurfaceType t = h.type;
  t.kinds.clear();
  for (int i = 0; i < static_cast<int>(h.peripheral.size()); ++i)
    t.kinds.push_back(boundary_length(h, i) > 0 ? PunctureKind::boundary
                                                : PunctureKind::cusp);
  return t;
}

std::array<RMat, 3> pant_group(double l1, double l2, double l3) {
  for (double l : {l1, l2, l3})
    if (!(l >= 0) || !std::isfinite(l))
      fail(ErrorCode::InvalidArgument, "pant boundary lengths must be finite and >= 0");
  double a = 2 * std::cosh(l1 / 2), b = 2 * std::cosh(l2 / 2),
         c = 2 * std::cosh(l3 / 2);
  double beta = -(c + std::sqrt(std::max(0.0, c * c - 4))) / 2;
  RMat A{a, -1, 1, 0};
  RMat B{0, beta, -1 / beta, b};
  RMat C = (A * B).inverse();
  return {A, B, C};
}

namespace {

RMat diag(double x) { return {x, 0, 0, 1 / x}; }
const RMat kRpi{0, -1, 1, 0};

RMat twist_matrix(double t) { return diag(std::exp(t / 2)); }

// Orientation-preserving map with 0 -> rep and infinity -> att.
RMat axis_chart(double rep, double att) {
  if (std::isinf(att)) return {1, rep, 0, 1};
  if (std::isinf(rep)) return {att, -1, 1, 0};
  RMat g{att, rep, 1, 1};
  if (g.det() < 0) g = RMat{-att, rep, -1, 1};
  return normalized(g);
}

// Boundary point of an element of the pant group: attracting fixed point if
// hyperbolic, the fixed point if parabolic.
double marker_point(const RMat& m) {
  IsomClass k = classify(m);
  return k.fixed_attracting;
}

bool on_left(const Geodesic& l, double p) {
  return minkowski(boundary_null(p), leaf_normal(l)) > 0;
}

struct PantData {
  std::array<RMat, 3> m;       // pant group matrices A, B, C
  std::array<bool, 3> flip{};  // oriented slot element = m^-1
  std::array<bool, 3> hyperbolic{};
  std::array<RMat, 3> frame;   // only for hyperbolic slots
  RMat oriented(int k) const { return flip[k] ? m[k].inverse() : m[k]; }
};

PantData build_pant(double l0, double l1, double l2) {
  PantData P;
  P.m = pant_group(l0, l1, l2);
  double ls[3] = {l0, l1, l2};
  for (int k = 0; k < 3; ++k) {
    P.hyperbolic[k] = ls[k] > 0;
    if (!P.hyperbolic[k]) continue;
    Geodesic ax = axis(P.m[k]);
    double q = marker_point(P.m[(k + 1) % 3]);
    P.flip[k] = !on_left(ax, q);
  }
  for (int k = 0; k < 3; ++k) {
    if (!P.hyperbolic[k]) continue;
    Geodesic ax = axis(P.oriented(k));
    RMat g = axis_chart(ax.minus, ax.plus);
    RMat gi = g.inverse();
    const RMat& nxt = P.m[(k + 1) % 3];
    double h;
    if (P.hyperbolic[(k + 1) % 3]) {
      auto [f1, f2] = fixed_points(nxt);
      double c = mobius_boundary(gi, f1), d = mobius_boundary(gi, f2);
      if (!(c * d > 0))
        fail(ErrorCode::InvalidStructure, "pant cuff axes are not disjoint");
      h = std::sqrt(c * d);
    } else {
      double c = mobius_boundary(gi, marker_point(nxt));
      h = std::abs(c);
    }
    P.frame[k] = g * diag(std::sqrt(h));
  }
  return P;
}

// Letters of the presentation before elimination: pant p contributes 2p, 2p+1
// and stable letters follow.
Word slot_word(const PantData& P, int p, int k) {
  Word w;
  if (k == 0) w = {letter(2 * p)};
  else if (k == 1) w = {letter(2 * p + 1)};
  else w = {letter(2 * p + 1, true), letter(2 * p, true)};
  return P.flip[k] ? inverse(w) : w;
}

struct Eliminator {
  std::vector<std::optional<Word>> subst;
  explicit Eliminator(int n) : subst(n) {}

  Word expand(const Word& w) const {
    Word out;
    for (int l : w) {
      int g = generator_of(l);
      if (subst[g]) {
        Word e = expand(*subst[g]);
        if (l < 0) e = inverse(e);
        out.insert(out.end(), e.begin(), e.end());
      } else {
        out.push_back(l);
      }
    }
    return reduce(out);
  }

  // Eliminate one generator using relation r = 1. Returns false if no
  // generator occurs exactly once.
  bool eliminate(const Word& rel) {
    Word r = expand(rel);
    std::map<int, int> count;
    for (int l : r) ++count[generator_of(l)];
    int pick = -1;
    for (auto& [g, c] : count)
      if (c == 1) pick = std::max(pick, g);
    if (pick < 0) return false;
    std::size_t pos = 0;
    while (generator_of(r[pos]) != pick) ++pos;
    Word U(r.begin(), r.begin() + pos), V(r.begin() + pos + 1, r.end());
    // U x^e V = 1  =>  x^e = U^-1 V^-1
    Word xe = concat(inverse(U), inverse(V));
    subst[pick] = r[pos] > 0 ? xe : inverse(xe);
    return true;
  }
};

}  // namespace

Holonomy holonomy_from_fn(const PantDecomposition& pd, const FNPoint& x) {
  if (static_cast<int>(x.boundary.size()) != pd.punctures ||
      static_cast<int>(x.length.size()) != pd.interior ||
      static_cast<int>(x.twist.size()) != pd.interior)
    fail(ErrorCode::DimensionMismatch,
         "FN point dimension does not match the pant decomposition");
  for (double l : x.boundary)
    if (!(l >= 0) || !std::isfinite(l))
      fail(ErrorCode::InvalidArgument, "boundary lengths must be >= 0");
  for (double l : x.length)
    if (!(l > 0) || !std::isfinite(l))
      fail(ErrorCode::InvalidArgument, "interior lengths must be > 0");
  for (double t : x.twist)
    if (!std::isfinite(t)) fail(ErrorCode::InvalidArgument, "twist must be finite");

  int np = static_cast<int>(pd.pants.size());
  auto len = [&](const CurveRef& c) {
    return c.boundary ? x.boundary[c.index] : x.length[c.index];
  };
  std::vector<PantData> P;
  for (const auto& p : pd.pants) P.push_back(build_pant(len(p[0]), len(p[1]), len(p[2])));

  // Spanning tree by BFS; non-tree curves become stable letters.
  std::vector<std::optional<RMat>> place(np);
  place[0] = RMat::identity();
  struct Gluing {
    int curve;
    Slot a, b;
    bool tree;
    int stable = -1;
    RMat s;
  };
  std::vector<Gluing> glue;
  std::vector<int> done(pd.interior, 0);
  std::deque<int> queue{0};
  int nstable = 0;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (int k = 0; k < 3; ++k) {
      const CurveRef& c = pd.pants[p][k];
      if (c.boundary || done[c.index]) continue;
      done[c.index] = 1;
      const auto& sl = pd.interior_slots[c.index];
      Slot self{p, k};
      Slot other = (sl[0].pant == p && sl[0].cuff == k) ? sl[1] : sl[0];
      RMat target = *place[p] * P[p].frame[k] * twist_matrix(x.twist[c.index]) *
                    kRpi * P[other.pant].frame[other.cuff].inverse();
      Gluing g{c.index, self, other, false, -1, RMat::identity()};
      if (!place[other.pant]) {
        place[other.pant] = normalized(target);
        g.tree = true;
        queue.push_back(other.pant);
      } else {
        g.stable = nstable++;
        g.s = normalized(target * place[other.pant]->inverse());
      }
      glue.push_back(g);
    }
  }

  int nletters = 2 * np + nstable;
  auto stable_letter = [&](int j) { return 2 * np + j; };
  std::vector<RMat> realized(nletters);
  for (int p = 0; p < np; ++p) {
    realized[2 * p] = *place[p] * P[p].m[0] * place[p]->inverse();
    realized[2 * p + 1] = *place[p] * P[p].m[1] * place[p]->inverse();
  }
  for (const auto& g : glue)
    if (!g.tree) realized[stable_letter(g.stable)] = g.s;

  // Relations, tree gluings first, then the stable-letter relations.
  Eliminator elim(nletters);
  std::vector<Word> relators;
  auto W = [&](const Slot& s) { return slot_word(P[s.pant], s.pant, s.cuff); };
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& g : glue) {
      if (g.tree != (pass == 0)) continue;
      Word rel;
      if (g.tree) {
        rel = concat(W(g.a), W(g.b));
      } else {
        Word s{letter(stable_letter(g.stable))};
        rel = concat({W(g.a), s, W(g.b), inverse(s)});
      }
      if (!elim.eliminate(rel)) relators.push_back(rel);
    }

  std::vector<int> basis_index(nletters, -1);
  Holonomy h;
  for (int l = 0; l < nletters; ++l) {
    if (elim.subst[l]) continue;
    basis_index[l] = h.rank();
    h.gens.push_back(realized[l]);
    if (l < 2 * np)
      h.gen_names.push_back((l % 2 == 0 ? "x" : "y") + std::to_string(l / 2));
    else
      h.gen_names.push_back("s" + std::to_string(l - 2 * np));
  }
  auto to_basis = [&](const Word& w) {
    Word e = elim.expand(w), out;
    for (int l : e) {
      int b = basis_index[generator_of(l)];
      out.push_back(letter(b, l < 0));
    }
    return out;
  };
  for (const Word& r : relators) h.relators.push_back(to_basis(r));

  for (int i = 0; i < pd.punctures; ++i) {
    Word w = to_basis(W(pd.boundary_slots[i]));
    h.peripheral.push_back(w);
    h.dictionary.push_back({"C" + std::to_string(i), w});
  }
  h.interior_words.resize(pd.interior);
  h.interior_axes.resize(pd.interior);
  std::vector<NamedCurve> primes;
  for (const auto& g : glue) {
    Word Z = W(g.a);
    Word zb = to_basis(Z);
    h.interior_words[g.curve] = zb;
    RMat zm = *place[g.a.pant] * P[g.a.pant].oriented(g.a.cuff) *
              place[g.a.pant]->inverse();
    h.interior_axes[g.curve] = axis(zm);
    std::string nm = "z" + std::to_string(g.curve);
    h.dictionary.push_back({nm, zb});
    Word z1, z2;
    if (!g.tree && g.a.pant == g.b.pant) {
      Word s{letter(stable_letter(g.stable))};
      z1 = s;
      z2 = concat(Z, s);
    } else {
      Word conj = g.tree ? Word{} : Word{letter(stable_letter(g.stable))};
      Word nP = W(Slot{g.a.pant, (g.a.cuff + 1) % 3});
      Word nQ = concat({conj, W(Slot{g.b.pant, (g.b.cuff + 1) % 3}), inverse(conj)});
      z1 = concat(nP, nQ);
      z2 = concat({nP, Z, nQ, inverse(Z)});
    }
    primes.push_back({nm + "'", to_basis(z1)});
    primes.push_back({nm + "''", to_basis(z2)});
  }
  std::sort(h.dictionary.begin() + pd.punctures, h.dictionary.end(),
            [](const NamedCurve& a, const NamedCurve& b) {
              return a.name.size() != b.name.size() ? a.name.size() < b.name.size()
                                                    : a.name < b.name;
            });
  for (auto& c : primes) h.dictionary.push_back(c);
  if (pd.genus == 1 && pd.punctures == 1 && h.rank() == 2) {
    Word a = h.curve("z0"), b = h.curve("z0'");
    h.dictionary.push_back({"a", a});
    h.dictionary.push_back({"b", b});
    h.dictionary.push_back({"ab", concat(a, b)});
    h.dictionary.push_back({"[a,b]", concat({a, b, inverse(a), inverse(b)})});
  }

  // Base point inside pant 0, on the seam from its first hyperbolic cuff.
  const PantData& P0 = P[0];
  int k0 = -1;
  for (int k = 0; k < 3; ++k)
    if (P0.hyperbolic[k]) { k0 = k; break; }
  if (k0 >= 0) {
    double dist = 1.0;
    if (P0.hyperbolic[(k0 + 1) % 3]) {
      Geodesic other = axis(P0.m[(k0 + 1) % 3]);
      cplx foot = mobius(P0.frame[k0], cplx(0, 1));
      dist = 0.5 * std::abs(signed_distance(other, foot));
    }
    cplx local = cplx(-std::sinh(dist), 1.0) / std::cosh(dist);
    h.base_point = mobius(P0.frame[k0], local);
  } else {
    // All three cuffs are cusps: centre of the ideal triangle they span.
    std::array<double, 3> v;
    for (int k = 0; k < 3; ++k) v[k] = marker_point(P0.m[k]);
    std::sort(v.begin(), v.end());
    RMat g = axis_chart(v[1], v[2]);  // v1 -> 0, v2 -> inf
    double w = mobius_boundary(g.inverse(), v[0]);
    h.base_point = mobius(g, cplx(0.5 * w, std::abs(w) * std::sqrt(3.0) / 2));
  }
  // Recentre so that the base point sits at i; keeps entries small.
  RMat G = normalized(RMat{1, -h.base_point.real(), 0, h.base_point.imag()});
  for (RMat& g : h.gens) g = G * g * G.inverse();
  for (Geodesic& a : h.interior_axes) a = mobius(G, a);
  h.base_point = cplx(0, 1);
  h.type = SurfaceType{pd.genus, pd.punctures, {}};
  for (double l : x.boundary)
    h.type.kinds.push_back(l > 0 ? PunctureKind::boundary : PunctureKind::cusp);
  return h;
}

// ---- shear coordinates ------------------------------------------------------

namespace {

using Triple = std::array<double, 3>;

// Orientation-preserving map sending p0 -> 0, p1 -> inf, p2 -> 1 (possibly
// orientation reversing; the caller checks).
RMat to_standard(const Triple& p) {
  if (std::isinf(p[0])) return {0, p[2] - p[1], 1, -p[1]};
  if (std::isinf(p[1])) return {1, -p[0], 0, p[2] - p[0]};
  if (std::isinf(p[2])) return {1, -p[0], 1, -p[1]};
  return {p[2] - p[1], -p[0] * (p[2] - p[1]), p[2] - p[0], -p[1] * (p[2] - p[0])};
}

RMat triple_map(const Triple& p, const Triple& q) {
  RMat m = to_standard(q).inverse() * to_standard(p);
  if (!(m.det() > 0))
    fail(ErrorCode::MalformedTriangulation, "developing map reverses orientation");
  return normalized(m);
}

// Third vertex of the triangle glued on the side a -> b of the triangle
// (a, b, c), with shear s.
double develop_vertex(double a, double b, double c, double s) {
  RMat m = triple_map({a, b, c}, {0, kInf, -1});
  return mobius_boundary(m.inverse(), std::exp(s));
}

}  // namespace

Holonomy holonomy_from_shear(const ShearPoint& x) {
  const Triangulation& T = x.tri;
  if (static_cast<int>(x.s.size()) != T.edges)
    fail(ErrorCode::DimensionMismatch, "shear vector length differs from edge count");
  for (double s : x.s)
    if (!std::isfinite(s)) fail(ErrorCode::InvalidArgument, "shear must be finite");
  int F = static_cast<int>(T.triangles.size());
  std::vector<std::optional<Triple>> place(F);
  place[0] = Triple{0.0, kInf, -1.0};
  std::vector<int> tree_edge(T.edges, 0);
  std::deque<int> queue{0};
  auto developed = [&](int t, int k) {
    const Triple& P = *place[t];
    double a = P[k], b = P[(k + 1) % 3], c = P[(k + 2) % 3];
    double d = develop_vertex(a, b, c, x.s[T.triangles[t][k]]);
    auto nb = T.across(t, k);
    Triple Q;
    Q[nb[1]] = b;
    Q[(nb[1] + 1) % 3] = a;
    Q[(nb[1] + 2) % 3] = d;
    return Q;
  };
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int k = 0; k < 3; ++k) {
      auto nb = T.across(t, k);
      if (place[nb[0]]) continue;
      place[nb[0]] = developed(t, k);
      tree_edge[T.triangles[t][k]] = 1;
      queue.push_back(nb[0]);
    }
  }
  Holonomy h;
  std::vector<int> gen_of_edge(T.edges, -1);
  for (int e = 0; e < T.edges; ++e) {
    if (tree_edge[e]) continue;
    auto oc = T.occurrences[e][0];
    auto nb = T.across(oc[0], oc[1]);
    gen_of_edge[e] = h.rank();
    h.gens.push_back(triple_map(*place[nb[0]], developed(oc[0], oc[1])));
    h.gen_names.push_back("g" + std::to_string(e));
  }
  auto crossing_letter = [&](int t, int k) -> std::optional<int> {
    int e = T.triangles[t][k];
    if (gen_of_edge[e] < 0) return std::nullopt;
    auto oc = T.occurrences[e][0];
    bool forward = oc[0] == t && oc[1] == k;
    return letter(gen_of_edge[e], !forward);
  };
  for (int i = 0; i < T.vertices; ++i) {
    Word w;
    bool found = false;
    for (int t = 0; t < F && !found; ++t)
      for (int k = 0; k < 3 && !found; ++k) {
        if (T.corner_vertex[t][k] != i) continue;
        found = true;
        int ct = t, ck = k;
        do {
          if (auto l = crossing_letter(ct, ck)) w.push_back(*l);
          auto nb = T.across(ct, ck);
          ct = nb[0];
          ck = (nb[1] + 1) % 3;
        } while (ct != t || ck != k);
      }
    w = reduce(w);
    h.peripheral.push_back(w);
    h.dictionary.push_back({"C" + std::to_string(i), w});
  }
  for (int g = 0; g < h.rank(); ++g) h.dictionary.push_back({h.gen_names[g], {letter(g)}});
  if (T.genus == 1 && T.vertices == 1 && h.rank() == 2) {
    Word a{letter(0)}, b{letter(1)};
    h.dictionary.push_back({"a", a});
    h.dictionary.push_back({"b", b});
    h.dictionary.push_back({"ab", concat(a, b)});
    h.dictionary.push_back({"[a,b]", concat({a, b, inverse(a), inverse(b)})});
  }
  for (int e = 0; e < T.edges; ++e) {
    auto oc = T.occurrences[e][0];
    const Triple& P = *place[oc[0]];
    h.edge_seeds.push_back({P[oc[1]], P[(oc[1] + 1) % 3]});
  }
  h.base_point = cplx(-0.5, std::sqrt(3.0) / 2);
  h.type = SurfaceType{T.genus, T.vertices, {}};
  for (int i = 0; i < T.vertices; ++i)
    h.type.kinds.push_back(x.star_sum(i) == 0.0 ? PunctureKind::cusp
                                                : PunctureKind::boundary);
  return h;
}

}  // namespace mgh
