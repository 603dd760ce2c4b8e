#include "mgh/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mgh {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorCode::Parse, where + ": " + what);
}

const json& need(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing field '" + key + "'");
  return *it;
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

std::vector<double> numbers(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(as_number(j[k], where + "/" + std::to_string(k)));
  return out;
}

std::vector<int> signs(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of signs");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    int s = as_int(j[k], where + "/" + std::to_string(k));
    if (s != 1 && s != -1) bad(where + "/" + std::to_string(k), "signs are +1 or -1");
    out.push_back(s);
  }
  return out;
}

PantDecomposition parse_pants(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "once-punctured-torus") return PantDecomposition::once_punctured_torus();
    if (s == "four-punctured-sphere") return PantDecomposition::four_punctured_sphere();
    if (s == "three-punctured-sphere") return PantDecomposition::three_punctured_sphere();
    bad("/pants", "unknown standard decomposition '" + s + "'");
  }
  if (!j.is_array()) bad("/pants", "expected an array of curve triples");
  std::vector<std::array<CurveRef, 3>> pants;
  for (std::size_t p = 0; p < j.size(); ++p) {
    std::string where = "/pants/" + std::to_string(p);
    if (!j[p].is_array() || j[p].size() != 3) bad(where, "a pant has three curves");
    std::array<CurveRef, 3> cuffs;
    for (int c = 0; c < 3; ++c) {
      if (!j[p][c].is_string()) bad(where, "curves are named C<i> or z<j>");
      try {
        cuffs[c] = CurveRef::parse(j[p][c].get<std::string>());
      } catch (const Error& e) {
        bad(where, e.what());
      }
    }
    pants.push_back(cuffs);
  }
  return PantDecomposition::make(std::move(pants));
}

Triangulation parse_tri(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "once-punctured-torus") return Triangulation::once_punctured_torus();
    if (s == "three-punctured-sphere") return Triangulation::three_punctured_sphere();
    bad("/shear/tri", "unknown standard triangulation '" + s + "'");
  }
  if (!j.is_array()) bad("/shear/tri", "expected an array of edge triples");
  std::vector<std::array<int, 3>> tris;
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::string where = "/shear/tri/" + std::to_string(t);
    if (!j[t].is_array() || j[t].size() != 3) bad(where, "a triangle has three edges");
    tris.push_back({as_int(j[t][0], where), as_int(j[t][1], where), as_int(j[t][2], where)});
  }
  return Triangulation::make(std::move(tris));
}

void check_surface(const json& j, Scenario& sc) {
  SurfaceType st;
  st.genus = as_int(need(j, "genus", "/surface"), "/surface/genus");
  st.punctures = as_int(need(j, "punctures", "/surface"), "/surface/punctures");
  if (j.contains("types")) {
    const json& t = j["types"];
    if (!t.is_array()) bad("/surface/types", "expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::string s = t[i].is_string() ? t[i].get<std::string>() : "";
      if (s == "cusp")
        st.kinds.push_back(PunctureKind::cusp);
      else if (s == "boundary")
        st.kinds.push_back(PunctureKind::boundary);
      else
        bad("/surface/types/" + std::to_string(i), "types are \"cusp\" or \"boundary\"");
    }
  }
  if (st.genus != sc.surface.genus || st.punctures != sc.surface.punctures)
    fail(ErrorCode::DimensionMismatch,
         "surface header (g=" + std::to_string(st.genus) + ", r=" +
             std::to_string(st.punctures) + ") does not match the chart (g=" +
             std::to_string(sc.surface.genus) + ", r=" + std::to_string(sc.surface.punctures) +
             ")");
  if (!st.kinds.empty() && st.kinds != sc.surface.kinds)
    fail(ErrorCode::DimensionMismatch, "surface puncture types do not match the chart lengths");
}

void parse_lamination(const json& j, Scenario& sc) {
  std::string fam = need(j, "family", "/lamination").is_string()
                        ? j["family"].get<std::string>()
                        : std::string();
  std::vector<double> w = numbers(need(j, "weights", "/lamination"), "/lamination/weights");
  std::vector<int> sigma;
  if (j.contains("signature")) sigma = signs(j["signature"], "/lamination/signature");
  if (fam == "multicurve") {
    if (!sc.pd) fail(ErrorCode::InvalidLamination, "a multicurve needs a pant decomposition");
    sc.lam = Lamination::multicurve(*sc.pd, std::move(w));
    if (!sigma.empty()) {
      if (sigma.size() != sc.lam->sigma.size())
        fail(ErrorCode::DimensionMismatch, "signature length differs from puncture count");
      sc.lam->sigma = sigma;
    }
  } else if (fam == "triangulation") {
    if (!sc.shear) fail(ErrorCode::InvalidLamination, "a triangulation lamination needs a shear chart");
    if (sigma.empty()) sigma = shear_signature(*sc.shear);
    sc.lam = Lamination::triangulation(sc.shear->tri, std::move(w), std::move(sigma));
  } else {
    bad("/lamination/family", "family is \"multicurve\" or \"triangulation\"");
  }
  if (j.contains("eta")) sc.eta = signs(j["eta"], "/lamination/eta");
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Holonomy Scenario::holonomy() const {
  if (fn) return holonomy_from_fn(*pd, *fn);
  return holonomy_from_shear(*shear);
}

EnhancedPoint Scenario::enhanced() const {
  if (fn) return EnhancedPoint::from_fn(*fn, eps);
  return EnhancedPoint::from_shear(*shear);
}

EnhancedLam Scenario::enhanced_lamination() const {
  if (!lam) fail(ErrorCode::InvalidLamination, "scenario has no lamination");
  return EnhancedLam::make(*lam, eta, surface.kinds);
}

bool Scenario::has_section(const std::string& name) const { return sections.contains(name); }

const json& Scenario::section(const std::string& name) const {
  return need(sections, name, "");
}

Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  try {
    sc.sections = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    auto cut = msg.find("syntax error");
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                               ": " + (cut == std::string::npos ? msg : msg.substr(cut)));
  }
  const json& j = sc.sections;
  if (!j.is_object()) bad("/", "a scenario is a JSON object");
  const json& fmt = need(j, "format", "");
  if (!fmt.is_string() || fmt.get<std::string>() != kScenarioFormat)
    bad("/format", std::string("expected \"") + kScenarioFormat + "\"");
  int version = as_int(need(j, "version", ""), "/version");
  if (version != kScenarioVersion)
    bad("/version", "unsupported version " + std::to_string(version));

  bool has_fn = j.contains("fn"), has_shear = j.contains("shear");
  if (has_fn == has_shear) bad("/", "give exactly one of \"fn\" and \"shear\"");
  if (has_fn) {
    sc.pd = parse_pants(need(j, "pants", ""));
    const json& f = j["fn"];
    FNPoint x;
    x.boundary = numbers(need(f, "boundary", "/fn"), "/fn/boundary");
    x.length = numbers(need(f, "l", "/fn"), "/fn/l");
    x.twist = numbers(need(f, "t", "/fn"), "/fn/t");
    if (f.contains("eps"))
      sc.eps = signs(f["eps"], "/fn/eps");
    else
      sc.eps.assign(x.boundary.size(), 1);
    sc.fn = x;
    Holonomy h = holonomy_from_fn(*sc.pd, x);
    sc.surface = h.type;
  } else {
    const json& s = j["shear"];
    ShearPoint x{parse_tri(need(s, "tri", "/shear")), numbers(need(s, "s", "/shear"), "/shear/s")};
    if (static_cast<int>(x.s.size()) != x.tri.edges)
      fail(ErrorCode::DimensionMismatch, "shear vector has " + std::to_string(x.s.size()) +
                                             " entries for " + std::to_string(x.tri.edges) +
                                             " edges");
    sc.shear = x;
    sc.surface = holonomy_from_shear(x).type;
  }
  if (j.contains("surface")) check_surface(j["surface"], sc);
  if (j.contains("lamination")) parse_lamination(j["lamination"], sc);
  sc.digest = fnv1a_hex(j.dump());
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, "cannot read scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Record::Record(std::string command, std::string digest) {
  j_["cmd"] = std::move(command);
  j_["digest"] = std::move(digest);
}

Record& Record::set(const std::string& key, double v) {
  j_[key] = number(v);
  return *this;
}

Record& Record::set(const std::string& key, int v) {
  j_[key] = v;
  return *this;
}

Record& Record::set(const std::string& key, bool v) {
  j_[key] = v;
  return *this;
}

Record& Record::set(const std::string& key, const std::string& v) {
  j_[key] = v;
  return *this;
}

Record& Record::set(const std::string& key, const std::vector<double>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (double x : v) a.push_back(number(x));
  j_[key] = std::move(a);
  return *this;
}

Record& Record::set(const std::string& key, const std::vector<int>& v) {
  j_[key] = v;
  return *this;
}

Record& Record::set_json(const std::string& key, nlohmann::ordered_json v) {
  j_[key] = std::move(v);
  return *this;
}

std::string Record::line() const { return j_.dump(); }

void Mesh::grid_faces(int nu, int nv) {
  for (int i = 0; i + 1 < nu; ++i)
    for (int k = 0; k + 1 < nv; ++k) {
      int a = i * nv + k, b = a + 1, c = a + nv, d = c + 1;
      faces.push_back({a, c, b});
      faces.push_back({b, c, d});
    }
}

std::string mesh_text(const Mesh& m) {
  std::string out = "# mgh-mesh v1 vertices=" + std::to_string(m.vertices.size()) +
                    " faces=" + std::to_string(m.faces.size()) + "\n";
  char buf[96];
  for (const auto& v : m.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out += buf;
  }
  for (const auto& f : m.faces) {
    std::snprintf(buf, sizeof buf, "f %d %d %d\n", f[0], f[1], f[2]);
    out += buf;
  }
  return out;
}

void write_mesh(const Mesh& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write mesh file '" + path + "'");
  out << mesh_text(m);
}

std::vector<double> parse_grid(const std::string& spec) {
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v))
      fail(ErrorCode::Parse, "grid '" + spec + "': '" + s + "' is not a number");
    return v;
  };
  std::vector<std::string> parts;
  char sep = spec.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  if (sep == ',') {
    std::vector<double> out;
    for (const auto& p : parts) out.push_back(num(p));
    if (out.empty()) fail(ErrorCode::Parse, "grid '" + spec + "' is empty");
    return out;
  }
  if (parts.size() != 3) fail(ErrorCode::Parse, "grid '" + spec + "' is not lo:hi:n");
  double lo = num(parts[0]), hi = num(parts[1]), n = num(parts[2]);
  if (n < 1 || n != std::floor(n) || n > 1e6)
    fail(ErrorCode::Parse, "grid '" + spec + "' needs a positive integer count");
  int count = static_cast<int>(n);
  std::vector<double> out;
  for (int k = 0; k < count; ++k)
    out.push_back(count == 1 ? lo : lo + (hi - lo) * k / (count - 1));
  return out;
}

}  // namespace mgh
