#pragma once
// Scenario files, record streams and mesh output for the batch front-end.
//
// A scenario is a JSON document with a versioned header:
//
//   { "format": "mgh-scenario", "version": 1,
//     "surface": { "genus": 1, "punctures": 1, "types": ["cusp"] },
//     "pants": [["z0", "z0", "C0"]],
//     "fn": { "boundary": [0], "l": [1.3], "t": [0.4], "eps": [1] },
//     "lamination": { "family": "multicurve", "weights": [0.7] } }
//
// "shear": { "tri": [[0,1,2],[0,1,2]], "s": [...] } replaces "pants"/"fn" for
// a triangulated surface. Command sections ("flow", "bend", "wick", "btz",
// "blackhole") carry per-command parameters.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mgh/earthquake.hpp"

namespace mgh {

inline constexpr const char* kScenarioFormat = "mgh-scenario";
inline constexpr int kScenarioVersion = 1;

struct Scenario {
  SurfaceType surface;
  std::optional<PantDecomposition> pd;
  std::optional<FNPoint> fn;
  std::vector<int> eps;  // boundary orientations for the FN chart
  std::optional<ShearPoint> shear;
  std::optional<Lamination> lam;
  std::vector<int> eta;  // relaxed signature, empty for "follow sigma"
  nlohmann::json sections;  // the whole document, for command parameters
  std::string digest;

  Holonomy holonomy() const;
  EnhancedPoint enhanced() const;
  EnhancedLam enhanced_lamination() const;
  bool has_section(const std::string& name) const;
  const nlohmann::json& section(const std::string& name) const;
};

// Throws ErrorCode::Parse with line and column for syntax errors and for
// missing or ill-typed fields; structural problems keep their own codes.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

// One output line: {"cmd": ..., "digest": ..., fields...} with insertion
// order kept so that the stream is byte-stable.
class Record {
 public:
  Record(std::string command, std::string digest);
  Record& set(const std::string& key, double v);
  Record& set(const std::string& key, int v);
  Record& set(const std::string& key, bool v);
  Record& set(const std::string& key, const std::string& v);
  Record& set(const std::string& key, const std::vector<double>& v);
  Record& set(const std::string& key, const std::vector<int>& v);
  Record& set_json(const std::string& key, nlohmann::ordered_json v);
  std::string line() const;

 private:
  nlohmann::ordered_json j_;
};

// Non-finite values are written as null.
nlohmann::ordered_json number(double v);

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;
  // Two triangles per cell of an nu x nv vertex grid stored row by row.
  void grid_faces(int nu, int nv);
};

// "# mgh-mesh v1 vertices=N faces=M", then "v x y z" and "f i j k" lines
// with 0-based indices.
std::string mesh_text(const Mesh& m);
void write_mesh(const Mesh& m, const std::string& path);

// Grid specification "lo:hi:n" (n samples, both ends included) or a comma
// separated list of values.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace mgh
