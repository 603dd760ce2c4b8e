#pragma once
// Batch commands behind the `mgh` executable. Each command writes one JSON
// record per line through the sink; the stream is deterministic for a fixed
// scenario and option set.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mgh/scenario.hpp"

namespace mgh {

struct RunOptions {
  int depth = 0;      // 0 keeps the module defaults
  double tol = 0;     // 0 keeps the module defaults
  std::string mesh_out;
  std::string grid;
  std::string suite = "all";
  std::string model;  // bend: "hyp" or "ads"
  std::optional<double> rp, rm;
};

using RecordSink = std::function<void(const std::string&)>;

const std::vector<std::string>& command_names();
bool command_needs_scenario(const std::string& command);

// Returns false only when a verification check failed.
bool run_command(const std::string& command, const Scenario* sc, const RunOptions& opt,
                 const RecordSink& sink);

}  // namespace mgh
