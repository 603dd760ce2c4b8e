#include "mgh/commands.hpp"

#include <algorithm>
#include <cmath>

#include "mgh/blackhole.hpp"
#include "mgh/curvature.hpp"
#include "mgh/spacetime.hpp"
#include "mgh/verify.hpp"

namespace mgh {

using ojson = nlohmann::ordered_json;

namespace {

struct Ctx {
  const Scenario* sc;
  const RunOptions& opt;
  const RecordSink& sink;
  std::string digest;

  Record rec(const std::string& cmd) const { return Record(cmd, digest); }
  void emit(const Record& r) const { sink(r.line()); }

  const Scenario& scenario() const {
    if (!sc) fail(ErrorCode::InvalidArgument, "this command needs a scenario file");
    return *sc;
  }
  const Lamination& lamination() const {
    if (!scenario().lam) fail(ErrorCode::InvalidLamination, "scenario has no lamination section");
    return *sc->lam;
  }
  const nlohmann::json* section(const std::string& name) const {
    if (sc && sc->has_section(name)) return &sc->section(name);
    return nullptr;
  }
  double param(const std::string& sect, const std::string& key, double fallback) const {
    const nlohmann::json* s = section(sect);
    if (!s || !s->contains(key)) return fallback;
    if (!(*s)[key].is_number()) fail(ErrorCode::Parse, "/" + sect + "/" + key + ": expected a number");
    return (*s)[key].get<double>();
  }
  std::vector<double> range(const std::string& sect, const std::string& key,
                            const std::string& fallback) const {
    const nlohmann::json* s = section(sect);
    if (!s || !s->contains(key)) return parse_grid(fallback);
    const auto& v = (*s)[key];
    if (v.is_string()) return parse_grid(v.get<std::string>());
    if (!v.is_array()) fail(ErrorCode::Parse, "/" + sect + "/" + key + ": expected a grid");
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) fail(ErrorCode::Parse, "/" + sect + "/" + key + ": expected numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }
};

ojson mat(const RMat& m) { return ojson::array({m.a, m.b, m.c, m.d}); }

ojson arc(const CircleArc& a) {
  if (a.point) return ojson::array({number(a.from)});
  return ojson::array({number(a.from), number(a.to)});
}

ojson pair_json(const std::array<double, 2>& p) {
  return ojson::array({number(p[0]), number(p[1])});
}

double dictionary_gap(const Holonomy& g, const Holonomy& h) {
  double worst = 0;
  for (const NamedCurve& c : h.dictionary)
    worst = std::max(worst, std::abs(std::abs(g.eval(c.word).trace()) -
                                     std::abs(h.eval(c.word).trace())));
  return worst;
}

std::string kind_of(PunctureKind k) { return k == PunctureKind::cusp ? "cusp" : "boundary"; }

// ---- commands ------------------------------------------------------------------

void classify_cmd(const Ctx& c) {
  Holonomy h = c.scenario().holonomy();
  double tol = c.opt.tol > 0 ? c.opt.tol : kClassTol;
  for (const NamedCurve& nc : h.dictionary) {
    IsomClass k = classify(h.eval(nc.word), tol);
    Record r = c.rec("classify");
    r.set("curve", nc.name).set("word", word_string(nc.word, h.gen_names));
    r.set("kind", std::string(kind_name(k.kind))).set("trace", k.trace);
    if (k.kind == IsomKind::hyperbolic) r.set("length", k.translation_length);
    if (k.kind == IsomKind::elliptic) r.set("angle", k.rotation_angle);
    if (k.kind == IsomKind::hyperbolic || k.kind == IsomKind::parabolic)
      r.set("fixed", std::vector<double>{k.fixed_attracting, k.fixed_repelling});
    c.emit(r);
  }
}

void holonomy_cmd(const Ctx& c) {
  Holonomy h = c.scenario().holonomy();
  for (int k = 0; k < h.rank(); ++k)
    c.emit(c.rec("holonomy")
               .set("gen", h.gen_names[k])
               .set("deform", std::string("fuchsian"))
               .set_json("matrix", mat(h.gens[k]))
               .set("trace", h.gens[k].trace()));
  if (!c.sc->lam) return;
  for (QuakeSide side : {QuakeSide::left, QuakeSide::right}) {
    DeformedHolonomy d = quake_holonomy(h, *c.sc->lam, side, c.opt.depth);
    for (int k = 0; k < h.rank(); ++k)
      c.emit(c.rec("holonomy")
                 .set("gen", h.gen_names[k])
                 .set("deform", std::string(side == QuakeSide::left ? "quake-left" : "quake-right"))
                 .set_json("matrix", mat(d.h.gens[k]))
                 .set("trace", d.h.gens[k].trace())
                 .set("depth", d.depth)
                 .set("converged", d.converged));
  }
}

void spectrum_cmd(const Ctx& c) {
  const Scenario& sc = c.scenario();
  const Lamination& lam = c.lamination();
  Holonomy h = sc.holonomy();
  auto I = measure_spectrum_peripheral(lam);
  std::vector<double> lengths;
  EnhancedLam el = sc.enhanced_lamination();
  for (int i = 0; i < lam.punctures; ++i) {
    lengths.push_back(boundary_length(h, i));
    c.emit(c.rec("spectrum")
               .set("puncture", i)
               .set("type", kind_of(sc.surface.kinds[i]))
               .set("length", lengths.back())
               .set("I", I[i])
               .set("sigma", lam.sigma[i])
               .set("eta", el.eta[i])
               .set("I_enh", enhanced_spectrum(el, i)));
  }
  if (lam.family == LamFamily::multicurve)
    for (const NamedCurve& nc : h.dictionary) {
      double v;
      try {
        v = intersection_spectrum(nc.name, lam);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::UnsupportedCurve) throw;
        continue;
      }
      c.emit(c.rec("spectrum").set("curve", nc.name).set("I", v));
    }
  c.emit(c.rec("spectrum").set("in_V_c", in_V_c(lengths, lam)));
}

void quake_cmd(const Ctx& c) {
  const Scenario& sc = c.scenario();
  const Lamination& lam = c.lamination();
  Holonomy h = sc.holonomy();
  for (QuakeSide side : {QuakeSide::left, QuakeSide::right}) {
    std::string name = side == QuakeSide::left ? "left" : "right";
    Record r = c.rec("quake");
    r.set("side", name);
    Holonomy rebuilt;
    if (sc.fn) {
      FNPoint F = quake_coordinates(*sc.fn, lam, side);
      r.set("twist", F.twist);
      rebuilt = holonomy_from_fn(*sc.pd, F);
    } else {
      ShearPoint S = quake_shear(*sc.shear, lam, side);
      r.set("shear", S.s);
      rebuilt = holonomy_from_shear(S);
    }
    std::vector<double> lengths;
    for (int i = 0; i < sc.surface.punctures; ++i) lengths.push_back(boundary_length(rebuilt, i));
    r.set("boundary", lengths);
    DeformedHolonomy d = quake_holonomy(h, lam, side, c.opt.depth);
    r.set("trace_gap", dictionary_gap(d.h, rebuilt)).set("depth", d.depth).set("converged", d.converged);
    c.emit(r);
  }
}

void flow_cmd(const Ctx& c) {
  const Scenario& sc = c.scenario();
  FlowState st;
  const nlohmann::json* s = c.section("flow");
  if (s && s->contains("state")) {
    const auto& j = (*s)["state"];
    auto nums = [&](const char* k) {
      if (!j.contains(k) || !j[k].is_array()) fail(ErrorCode::Parse, std::string("/flow/state/") + k + ": expected an array");
      return j[k].get<std::vector<double>>();
    };
    auto ints = [&](const char* k) {
      if (!j.contains(k) || !j[k].is_array()) fail(ErrorCode::Parse, std::string("/flow/state/") + k + ": expected an array");
      return j[k].get<std::vector<int>>();
    };
    st = FlowState::make(nums("length"), ints("eps"), nums("I"), ints("eta"));
  } else {
    st = FlowState::make(sc.enhanced(), sc.enhanced_lamination());
  }
  std::vector<double> times = c.opt.grid.empty() ? c.range("flow", "times", "0:3:4")
                                                 : parse_grid(c.opt.grid);
  for (double t : times) {
    FlowState f = quake_flow(st, t);
    std::vector<double> l, le, crit;
    std::vector<int> eps, eta, sigma;
    ojson cusp = ojson::array();
    for (int i = 0; i < f.punctures(); ++i) {
      l.push_back(f.length(i));
      le.push_back(f.enhanced_length(i));
      eps.push_back(f.eps(i));
      eta.push_back(f.eta(i));
      sigma.push_back(f.sigma(i));
      cusp.push_back(f.cusp(i));
      crit.push_back(f.critical_time(i));
    }
    c.emit(c.rec("flow")
               .set("t", t)
               .set("l", l)
               .set("l_enh", le)
               .set("eps", eps)
               .set("eta", eta)
               .set("sigma", sigma)
               .set_json("cusp", cusp)
               .set("I_enh", [&] {
                 std::vector<double> v;
                 for (int i = 0; i < f.punctures(); ++i) v.push_back(f.enhanced_spectrum(i));
                 return v;
               }())
               .set("critical_time", crit));
  }
}

std::array<double, 3> ads_cylinder(const RMat& xin) {
  RMat x = normalized(xin);
  double x0 = (x.a + x.d) / 2, x1 = (x.b - x.c) / 2, x2 = (x.a - x.d) / 2, x3 = (x.b + x.c) / 2;
  if (x0 < 0 || (x0 == 0 && x1 < 0)) {
    x0 = -x0;
    x1 = -x1;
    x2 = -x2;
    x3 = -x3;
  }
  double rho = std::hypot(x0, x1);
  return {x2 / rho, x3 / rho, std::atan2(x1, x0)};
}

void bend_cmd(const Ctx& c) {
  const Scenario& sc = c.scenario();
  const Lamination& lam = c.lamination();
  Holonomy h = sc.holonomy();
  std::string model = c.opt.model;
  if (model.empty()) {
    const nlohmann::json* s = c.section("bend");
    model = s && s->contains("model") && (*s)["model"].is_string() ? (*s)["model"].get<std::string>()
                                                                    : "hyp";
  }
  if (model != "hyp" && model != "ads")
    fail(ErrorCode::InvalidArgument, "bend model is \"hyp\" or \"ads\"");
  double rad = c.param("bend", "radius", 0.6);
  int n = static_cast<int>(c.param("bend", "n", 9));
  std::vector<double> offs;
  if (!c.opt.grid.empty()) {
    offs = parse_grid(c.opt.grid);
  } else {
    if (n < 2) fail(ErrorCode::OutOfDomain, "bend grid needs at least 2 samples per side");
    for (int k = 0; k < n; ++k) offs.push_back(-rad + 2 * rad * k / (n - 1));
  }
  cplx x0 = h.base_point;
  if (const nlohmann::json* s = c.section("bend"); s && s->contains("base")) {
    auto b = (*s)["base"].get<std::vector<double>>();
    if (b.size() != 2 || !(b[1] > 0)) fail(ErrorCode::OutOfDomain, "/bend/base: a point of H^2");
    x0 = {b[0], b[1]};
  }
  double reach = 0;
  for (double u : offs)
    for (double v : offs) {
      cplx z = x0 + cplx(u, v) * x0.imag();
      if (!(z.imag() > 0)) fail(ErrorCode::OutOfDomain, "bend grid leaves the upper half-plane");
      reach = std::max(reach, hyp_distance(x0, z));
    }
  BendContext ctx(lam, h, x0, reach + 0.5, c.opt.depth);
  Mesh mesh;
  for (std::size_t i = 0; i < offs.size(); ++i)
    for (std::size_t k = 0; k < offs.size(); ++k) {
      cplx z = x0 + cplx(offs[i], offs[k]) * x0.imag();
      Record r = c.rec("bend");
      r.set("i", static_cast<int>(i)).set("k", static_cast<int>(k));
      r.set("z", std::vector<double>{z.real(), z.imag()});
      if (model == "hyp") {
        H3Point p = bend_map_hyp(ctx, z);
        std::array<double, 3> v{p.z.real(), p.z.imag(), p.t};
        mesh.vertices.push_back(v);
        r.set("point", std::vector<double>{v[0], v[1], v[2]});
      } else {
        RMat p = bend_map_ads(ctx, z);
        mesh.vertices.push_back(ads_cylinder(p));
        r.set_json("point", mat(normalized(p)));
      }
      c.emit(r);
    }
  mesh.grid_faces(static_cast<int>(offs.size()), static_cast<int>(offs.size()));
  Record sum = c.rec("bend");
  sum.set("model", model).set("vertices", static_cast<int>(mesh.vertices.size()));
  sum.set("depth", ctx.cache.depth()).set("converged", ctx.cache.converged());
  if (!c.opt.mesh_out.empty()) {
    write_mesh(mesh, c.opt.mesh_out);
    sum.set("mesh", c.opt.mesh_out);
  }
  c.emit(sum);
}

MetricFunction wick_metric(double alpha0) {
  return [alpha0](const Eigen::VectorXd& x) {
    return Eigen::MatrixXd(wick_pullback_literal(LocalPoint{x[0], x[2], x[1], alpha0}));
  };
}

void wick_cmd(const Ctx& c) {
  double alpha0 = c.param("wick", "alpha0", 1.0);
  std::vector<double> Ts =
      c.opt.grid.empty() ? c.range("wick", "T", "1.2:2.8:3") : parse_grid(c.opt.grid);
  std::vector<double> us = c.range("wick", "u", "-0.5:0.5:3");
  std::vector<double> zs = c.range("wick", "zeta", "-0.5:1.5:5");
  for (double T : Ts)
    if (!(T > 1)) fail(ErrorCode::OutOfDomain, "the Wick rotation needs T > 1");
  if (!(alpha0 > 0)) fail(ErrorCode::OutOfDomain, "alpha0 must be positive");
  double max_metric = 0, max_curv = 0;
  int points = 0;
  for (double T : Ts)
    for (double u : us)
      for (double zeta : zs) {
        LocalPoint p{T, u, zeta, alpha0};
        Vec4 img = wick_rotate(p);
        Mat3 A = wick_pullback(p), B = rescaled_metric(Rescaling::wick, p);
        double gap = (A - B).cwiseAbs().maxCoeff() / B.cwiseAbs().maxCoeff();
        auto [alpha, beta] = rescaling_factors(Rescaling::wick, T);
        Record r = c.rec("wick");
        r.set("T", T).set("u", u).set("zeta", zeta);
        r.set("regime", std::string(regime_name(regime(p))));
        r.set("image", std::vector<double>{img[0], img[1], img[2], img[3]});
        Mat3 G = wick_pullback_literal(p);
        r.set("metric", std::vector<double>(G.data(), G.data() + 9));
        r.set("alpha", alpha).set("beta", beta).set("metric_gap", gap);
        max_metric = std::max(max_metric, gap);
        bool on_seam = std::abs(zeta) < 1e-3 || std::abs(zeta - alpha0 / T) < 1e-3;
        if (on_seam) {
          r.set("curvature_residual", kInf);
        } else {
          Eigen::VectorXd x(3);
          x << T, zeta, u;
          double res = constant_curvature_residual(wick_metric(alpha0), x, -1.0);
          max_curv = std::max(max_curv, res);
          r.set("curvature_residual", res);
        }
        ++points;
        c.emit(r);
      }
  double seam = 0;
  for (double T : Ts)
    for (int s : {0, 1}) seam = std::max(seam, seam_c1_residual(LocalMap::wick, T, us.front(), alpha0, s));
  Record sum = c.rec("wick");
  sum.set("points", points).set("max_metric_gap", max_metric).set("max_curvature_residual", max_curv);
  sum.set("seam_c1", seam);
  if (!c.opt.mesh_out.empty()) {
    // Level surface T = Ts[0] in the Poincare ball.
    Mesh mesh;
    for (double u : us)
      for (double zeta : zs) {
        Vec4 x = wick_rotate(LocalPoint{Ts.front(), u, zeta, alpha0});
        mesh.vertices.push_back({x[1] / (1 + x[0]), x[2] / (1 + x[0]), x[3] / (1 + x[0])});
      }
    mesh.grid_faces(static_cast<int>(us.size()), static_cast<int>(zs.size()));
    write_mesh(mesh, c.opt.mesh_out);
    sum.set("mesh", c.opt.mesh_out);
  }
  c.emit(sum);
}

void btz_cmd(const Ctx& c) {
  BTZParams p;
  if (c.opt.rp || c.opt.rm) {
    if (!c.opt.rp || !c.opt.rm) fail(ErrorCode::InvalidArgument, "give both --rp and --rm");
    p = btz_params(*c.opt.rp, *c.opt.rm);
  } else if (const nlohmann::json* s = c.section("btz")) {
    if (s->contains("size"))
      p = btz_from_horizon({c.param("btz", "size", 0), c.param("btz", "momentum", 0)});
    else
      p = btz_params(c.param("btz", "rp", 1), c.param("btz", "rm", 0));
  } else {
    fail(ErrorCode::InvalidArgument, "btz needs --rp and --rm or a btz section");
  }
  HorizonData hd = btz_horizon(p);
  Record r = c.rec("btz");
  r.set("r_plus", p.r_plus).set("r_minus", p.r_minus).set("M", p.M).set("J", p.J);
  r.set("size", hd.size).set("momentum", hd.momentum);
  r.set("f_r_plus", p.f(p.r_plus)).set("f_r_minus", p.r_minus > 0 ? p.f(p.r_minus) : kInf);
  c.emit(r);
  std::vector<double> radii;
  if (!c.opt.grid.empty())
    radii = parse_grid(c.opt.grid);
  else if (c.section("btz") && c.section("btz")->contains("r"))
    radii = c.range("btz", "r", "");
  for (double rr : radii) {
    Record m = c.rec("btz");
    m.set("r", rr);
    try {
      Mat3 G = btz_metric(0, rr, 0, p);
      MetricFunction g = [&](const Eigen::VectorXd& x) {
        return Eigen::MatrixXd(btz_metric(x[0], x[1], x[2], p));
      };
      Eigen::VectorXd x(3);
      x << 0, rr, 0;
      std::vector<double> comps(G.data(), G.data() + 9);
      m.set("metric", comps).set("f", p.f(rr));
      m.set("curvature_residual", constant_curvature_residual(g, x, -1.0));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CoordinateSingularity) throw;
      m.set("singular", std::string(e.what()));
    }
    c.emit(m);
  }
}

void blackhole_cmd(const Ctx& c) {
  const Scenario& sc = c.scenario();
  Holonomy h = sc.holonomy();
  Lamination lam = sc.lam ? *sc.lam
                          : (sc.fn ? Lamination::multicurve(*sc.pd, std::vector<double>(sc.pd->interior, 0.0))
                                   : Lamination::triangulation(sc.shear->tri,
                                                               std::vector<double>(sc.shear->s.size(), 0.0)));
  AdSHolonomy ah = ads_holonomy(h, lam);
  int depth = c.opt.depth > 0 ? c.opt.depth : kOrbitDepth;
  std::vector<Rectangle> rects = peripheral_rectangles(ah, depth);
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const Rectangle& R = rects[i];
    Record r = c.rec("blackhole");
    r.set("puncture", static_cast<int>(i)).set("degenerate", R.degenerate);
    r.set_json("left", arc(R.left)).set_json("right", arc(R.right));
    r.set_json("horizon", ojson::array({pair_json(R.horizon[0]), pair_json(R.horizon[1])}));
    if (!R.degenerate) {
      const Word& w = h.peripheral[i];
      HorizonData hd = horizon_invariants(ah.left.eval(w), ah.right.eval(w));
      r.set("size", hd.size).set("momentum", hd.momentum);
      if (hd.size > std::abs(hd.momentum)) {
        BTZParams p = btz_from_horizon(hd);
        r.set("r_plus", p.r_plus).set("r_minus", p.r_minus).set("M", p.M).set("J", p.J);
      }
    }
    r.set("depth", depth).set("converged", ah.converged);
    c.emit(r);
  }
  std::vector<MeridianChoice> ms = extremal_meridians(rects);
  for (std::size_t k = 0; k < ms.size(); ++k) {
    ojson arcs = ojson::array();
    for (const auto& a : ms[k].arcs)
      arcs.push_back(ojson::array({pair_json(a[0]), pair_json(a[1]), pair_json(a[2])}));
    std::vector<int> upper(ms[k].upper.begin(), ms[k].upper.end());
    c.emit(c.rec("blackhole")
               .set("meridian", static_cast<int>(k))
               .set("upper", upper)
               .set("all_lower", ms[k].all_lower())
               .set("all_upper", ms[k].all_upper())
               .set_json("arcs", arcs));
  }
  c.emit(c.rec("blackhole")
             .set("rectangles", static_cast<int>(rects.size()))
             .set("meridians", static_cast<int>(ms.size()))
             .set("globally_hyperbolic", globally_hyperbolic(rects)));
}

bool verify_cmd(const Ctx& c) {
  auto checks = verify_suite(c.opt.suite, c.opt.tol);
  int failed = 0;
  for (const Check& k : checks) {
    if (!k.pass()) ++failed;
    c.emit(c.rec("verify")
               .set("suite", k.suite)
               .set("check", k.name)
               .set("value", k.value)
               .set("threshold", k.threshold)
               .set("pass", k.pass()));
  }
  c.emit(c.rec("verify")
             .set("suite", c.opt.suite)
             .set("checks", static_cast<int>(checks.size()))
             .set("failed", failed));
  return failed == 0;
}

std::string options_digest(const std::string& cmd, const RunOptions& o) {
  nlohmann::json j{{"cmd", cmd},     {"depth", o.depth}, {"tol", o.tol},   {"grid", o.grid},
                   {"suite", o.suite}, {"model", o.model}};
  if (o.rp) j["rp"] = *o.rp;
  if (o.rm) j["rm"] = *o.rm;
  return fnv1a_hex(j.dump());
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"classify", "holonomy", "spectrum", "quake",
                                              "flow",     "bend",     "wick",     "btz",
                                              "blackhole", "verify"};
  return names;
}

bool command_needs_scenario(const std::string& command) {
  return command != "wick" && command != "btz" && command != "verify";
}

bool run_command(const std::string& command, const Scenario* sc, const RunOptions& opt,
                 const RecordSink& sink) {
  if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
    fail(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
  if (opt.depth < 0) fail(ErrorCode::InvalidArgument, "depth must be >= 0");
  if (opt.tol < 0 || !std::isfinite(opt.tol)) fail(ErrorCode::InvalidArgument, "tol must be >= 0");
  std::string digest = sc ? fnv1a_hex(sc->digest + options_digest(command, opt))
                          : options_digest(command, opt);
  Ctx c{sc, opt, sink, digest};
  if (command == "classify") classify_cmd(c);
  if (command == "holonomy") holonomy_cmd(c);
  if (command == "spectrum") spectrum_cmd(c);
  if (command == "quake") quake_cmd(c);
  if (command == "flow") flow_cmd(c);
  if (command == "bend") bend_cmd(c);
  if (command == "wick") wick_cmd(c);
  if (command == "btz") btz_cmd(c);
  if (command == "blackhole") blackhole_cmd(c);
  if (command == "verify") return verify_cmd(c);
  return true;
}

}  // namespace mgh
