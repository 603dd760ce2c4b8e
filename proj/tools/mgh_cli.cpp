// Command-line front end. Talks to the library only through mgh.h.

#include <cstdio>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mgh/mgh.h"

namespace {

enum Exit { kSuccess = 0, kInternal = 1, kParse = 2, kDomain = 3, kVerify = 4 };

int exit_code(int status) {
  switch (status) {
    case MGH_OK: return kSuccess;
    case MGH_E_PARSE:
    case MGH_E_IO: return kParse;
    case MGH_E_VERIFY_FAILED: return kVerify;
    case MGH_E_INTERNAL: return kInternal;
    default: return kDomain;
  }
}

void print_record(const char* record, void*) {
  std::fputs(record, stdout);
  std::fputc('\n', stdout);
}

struct Args {
  std::string scenario;
  int depth = 0;
  double tol = 0;
  std::string mesh_out, grid, suite = "all", model;
  std::optional<double> rp, rm;
};

int run(const std::string& command, const Args& a) {
  mgh_scenario* sc = nullptr;
  if (!a.scenario.empty()) {
    int st = mgh_scenario_load(a.scenario.c_str(), &sc);
    if (st != MGH_OK) {
      std::fprintf(stderr, "mgh: %s: %s\n", a.scenario.c_str(), mgh_last_error());
      return exit_code(st);
    }
  }
  mgh_run_options opt;
  mgh_run_options_init(&opt);
  opt.depth = a.depth;
  opt.tol = a.tol;
  opt.mesh_out = a.mesh_out.c_str();
  opt.grid = a.grid.c_str();
  opt.suite = a.suite.c_str();
  opt.model = a.model.c_str();
  if (a.rp) {
    opt.has_rp = 1;
    opt.rp = *a.rp;
  }
  if (a.rm) {
    opt.has_rm = 1;
    opt.rm = *a.rm;
  }
  int st = mgh_run(command.c_str(), sc, &opt, print_record, nullptr);
  std::fflush(stdout);
  if (st != MGH_OK && st != MGH_E_VERIFY_FAILED)
    std::fprintf(stderr, "mgh %s: %s [%s]\n", command.c_str(), mgh_last_error(),
                 mgh_status_name(st));
  mgh_scenario_free(sc);
  return exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal globally hyperbolic spacetimes: batch commands over scenario files"};
  app.set_version_flag("--version", std::string(mgh_version()));
  app.require_subcommand(1);

  Args a;
  app.add_option("--depth", a.depth, "Word/orbit depth for lifted constructions (0: default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol", a.tol, "Tolerance override (0: module defaults)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--mesh-out", a.mesh_out, "Write a vertex/face mesh to this path");
  app.add_option("--grid", a.grid, "Sample grid: lo:hi:n or a comma list");

  const std::map<std::string, std::string> help{
      {"classify", "Classify the holonomy of every dictionary curve"},
      {"holonomy", "Generator matrices, with quake deformations if a lamination is given"},
      {"spectrum", "Peripheral and intersection measure spectra"},
      {"quake", "Left and right earthquakes in coordinates, checked against the cocycle"},
      {"flow", "Enhanced quake flow of the peripheral data over a time grid"},
      {"bend", "Sample the bent surface in H^3 or AdS"},
      {"wick", "Wick rotation of the flat local model on a grid"},
      {"btz", "BTZ parameters from horizon radii"},
      {"blackhole", "Horizon rectangles and extremal meridians of the AdS spacetime"},
      {"verify", "Run the cross-oracle suites"},
  };

  std::string chosen;
  for (std::size_t k = 0; k < mgh_command_count(); ++k) {
    std::string name = mgh_command_name(k);
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->fallthrough();
    auto* file = sub->add_option("scenario", a.scenario, "Scenario file")->check(CLI::ExistingFile);
    if (mgh_command_needs_scenario(name.c_str()) == 1) file->required();
    if (name == "verify")
      sub->add_option("--suite", a.suite,
                      "earthquake, bending, wick, rescaling, flow, blackhole or all")
          ->check(CLI::IsMember(
              {"all", "earthquake", "bending", "wick", "rescaling", "flow", "blackhole"}));
    if (name == "bend") sub->add_option("--model", a.model, "hyp or ads")->check(CLI::IsMember({"hyp", "ads"}));
    if (name == "btz") {
      sub->add_option("--rp", a.rp, "Outer horizon radius");
      sub->add_option("--rm", a.rm, "Inner horizon radius");
    }
    sub->callback([&chosen, name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  return run(chosen, a);
}
