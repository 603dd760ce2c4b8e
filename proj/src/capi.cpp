#include "mgh/mgh.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <string>

#include "mgh/bending.hpp"
#include "mgh/blackhole.hpp"
#include "mgh/commands.hpp"
#include "mgh/earthquake.hpp"
#include "mgh/spacetime.hpp"

struct mgh_scenario {
  mgh::Scenario sc;
};

struct mgh_flow {
  mgh::FlowState state;
};

struct mgh_holonomy {
  mgh::Holonomy h;
  int depth = 0;
  bool converged = true;
};

namespace {

thread_local std::string g_last_error;

int set_error(int status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

// Runs f and converts every exception into a status code.
template <class F>
int guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const mgh::Error& e) {
    return set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MGH_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MGH_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(MGH_E_INTERNAL, "unknown exception");
  }
}

int null_arg(const char* what) {
  return set_error(MGH_E_INVALID_ARGUMENT, std::string(what) + " is NULL");
}

mgh::RMat rmat(const double m[4]) { return {m[0], m[1], m[2], m[3]}; }

}  // namespace

extern "C" {

const char* mgh_version(void) { return "0.3.0"; }

const char* mgh_status_name(int status) {
  switch (status) {
    case MGH_OK: return "ok";
    case MGH_E_VERIFY_FAILED: return "verify-failed";
    case MGH_E_IO: return "io";
    case MGH_E_INTERNAL: return "internal";
    default: break;
  }
  if (status >= 1 && status <= MGH_E_INVALID_ARGUMENT)
    return mgh::error_code_name(static_cast<mgh::ErrorCode>(status));
  return "unknown";
}

const char* mgh_last_error(void) { return g_last_error.c_str(); }

int mgh_scenario_parse(const char* text, mgh_scenario** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new mgh_scenario{mgh::parse_scenario(text)};
    return MGH_OK;
  });
}

int mgh_scenario_load(const char* path, mgh_scenario** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!std::ifstream(path)) return set_error(MGH_E_IO, std::string("cannot read '") + path + "'");
  return guarded([&] {
    *out = new mgh_scenario{mgh::load_scenario(path)};
    return MGH_OK;
  });
}

void mgh_scenario_free(mgh_scenario* sc) { delete sc; }

const char* mgh_scenario_digest(const mgh_scenario* sc) { return sc ? sc->sc.digest.c_str() : ""; }

int mgh_scenario_punctures(const mgh_scenario* sc) { return sc ? sc->sc.surface.punctures : -1; }

void mgh_run_options_init(mgh_run_options* opt) {
  if (!opt) return;
  std::memset(opt, 0, sizeof *opt);
}

size_t mgh_command_count(void) { return mgh::command_names().size(); }

const char* mgh_command_name(size_t index) {
  const auto& names = mgh::command_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

int mgh_command_needs_scenario(const char* command) {
  if (!command) return -1;
  const auto& names = mgh::command_names();
  for (const auto& n : names)
    if (n == command) return mgh::command_needs_scenario(n) ? 1 : 0;
  return -1;
}

int mgh_run(const char* command, const mgh_scenario* sc, const mgh_run_options* opt,
            mgh_record_fn sink, void* user) {
  if (!command) return null_arg("command");
  if (!sink) return null_arg("sink");
  return guarded([&] {
    mgh::RunOptions o;
    if (opt) {
      o.depth = opt->depth;
      o.tol = opt->tol;
      if (opt->mesh_out) o.mesh_out = opt->mesh_out;
      if (opt->grid) o.grid = opt->grid;
      if (opt->suite && *opt->suite) o.suite = opt->suite;
      if (opt->model) o.model = opt->model;
      if (opt->has_rp) o.rp = opt->rp;
      if (opt->has_rm) o.rm = opt->rm;
    }
    if (mgh_command_needs_scenario(command) == 1 && !sc)
      return set_error(MGH_E_INVALID_ARGUMENT, std::string(command) + " needs a scenario");
    bool ok = mgh::run_command(command, sc ? &sc->sc : nullptr, o,
                               [&](const std::string& line) { sink(line.c_str(), user); });
    return ok ? MGH_OK : set_error(MGH_E_VERIFY_FAILED, "verification failed");
  });
}

int mgh_classify(const double m[4], double tol, mgh_class* out) {
  if (!m) return null_arg("m");
  if (!out) return null_arg("out");
  return guarded([&] {
    mgh::IsomClass k = mgh::classify(rmat(m), tol > 0 ? tol : mgh::kClassTol);
    out->kind = static_cast<int>(k.kind);
    out->trace = k.trace;
    out->translation_length = k.translation_length;
    out->rotation_angle = k.rotation_angle;
    out->fixed_attracting = k.fixed_attracting;
    out->fixed_repelling = k.fixed_repelling;
    return MGH_OK;
  });
}

static void fill_btz(const mgh::BTZParams& p, mgh_btz* out) {
  out->r_plus = p.r_plus;
  out->r_minus = p.r_minus;
  out->M = p.M;
  out->J = p.J;
}

int mgh_btz_from_radii(double r_plus, double r_minus, mgh_btz* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    fill_btz(mgh::btz_params(r_plus, r_minus), out);
    return MGH_OK;
  });
}

int mgh_btz_from_horizon(double size, double momentum, mgh_btz* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    fill_btz(mgh::btz_from_horizon({size, momentum}), out);
    return MGH_OK;
  });
}

int mgh_horizon(const double left[4], const double right[4], double* size, double* momentum) {
  if (!left || !right) return null_arg("matrix");
  if (!size || !momentum) return null_arg("output");
  return guarded([&] {
    mgh::HorizonData h = mgh::horizon_invariants(rmat(left), rmat(right));
    *size = h.size;
    *momentum = h.momentum;
    return MGH_OK;
  });
}

int mgh_wick_point(double T, double u, double zeta, double alpha0, double image[4],
                   double metric[9]) {
  return guarded([&] {
    mgh::LocalPoint p{T, u, zeta, alpha0};
    if (image) {
      mgh::Vec4 x = mgh::wick_rotate(p);
      for (int k = 0; k < 4; ++k) image[k] = x[k];
    }
    if (metric) {
      mgh::Mat3 g = mgh::wick_pullback_literal(p);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) metric[3 * r + c] = g(r, c);
    }
    return MGH_OK;
  });
}

int mgh_flow_create(size_t punctures, const double* length, const int* eps,
                    const double* spectrum, const int* eta, mgh_flow** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (punctures > 0 && (!length || !eps || !spectrum || !eta)) return null_arg("flow data");
  return guarded([&] {
    mgh::FlowState s = mgh::FlowState::make(
        std::vector<double>(length, length + punctures), std::vector<int>(eps, eps + punctures),
        std::vector<double>(spectrum, spectrum + punctures), std::vector<int>(eta, eta + punctures));
    *out = new mgh_flow{s};
    return MGH_OK;
  });
}

int mgh_flow_from_scenario(const mgh_scenario* sc, mgh_flow** out) {
  if (!sc) return null_arg("scenario");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new mgh_flow{mgh::FlowState::make(sc->sc.enhanced(), sc->sc.enhanced_lamination())};
    return MGH_OK;
  });
}

void mgh_flow_free(mgh_flow* f) { delete f; }

int mgh_flow_punctures(const mgh_flow* f) { return f ? f->state.punctures() : -1; }

int mgh_flow_at(const mgh_flow* f, double t, int puncture, mgh_flow_entry* out) {
  if (!f) return null_arg("flow");
  if (!out) return null_arg("out");
  if (puncture < 0 || puncture >= f->state.punctures())
    return set_error(MGH_E_INVALID_ARGUMENT, "puncture index out of range");
  return guarded([&] {
    mgh::FlowState s = mgh::quake_flow(f->state, t);
    out->length = s.length(puncture);
    out->enhanced_length = s.enhanced_length(puncture);
    out->enhanced_spectrum = s.enhanced_spectrum(puncture);
    out->critical_time = s.critical_time(puncture);
    out->eps = s.eps(puncture);
    out->eta = s.eta(puncture);
    out->sigma = s.sigma(puncture);
    out->cusp = s.cusp(puncture) ? 1 : 0;
    return MGH_OK;
  });
}

int mgh_holonomy_create(const mgh_scenario* sc, int deformation, int depth, mgh_holonomy** out) {
  if (!sc) return null_arg("scenario");
  if (!out) return null_arg("out");
  *out = nullptr;
  if (deformation < MGH_FUCHSIAN || deformation > MGH_ADS_RIGHT)
    return set_error(MGH_E_INVALID_ARGUMENT, "unknown deformation");
  return guarded([&] {
    const mgh::Scenario& s = sc->sc;
    mgh::Holonomy h = s.holonomy();
    auto* res = new mgh_holonomy{h};
    if (deformation != MGH_FUCHSIAN) {
      if (!s.lam) {
        delete res;
        mgh::fail(mgh::ErrorCode::InvalidLamination, "scenario has no lamination");
      }
      try {
        if (deformation == MGH_QUAKE_LEFT || deformation == MGH_QUAKE_RIGHT) {
          mgh::DeformedHolonomy d = mgh::quake_holonomy(
              h, *s.lam, deformation == MGH_QUAKE_LEFT ? mgh::QuakeSide::left : mgh::QuakeSide::right,
              depth);
          res->h = d.h;
          res->depth = d.depth;
          res->converged = d.converged;
        } else {
          mgh::AdSHolonomy a = mgh::ads_holonomy(h, *s.lam, depth);
          res->h = deformation == MGH_ADS_LEFT ? a.left : a.right;
          res->depth = a.depth;
          res->converged = a.converged;
        }
      } catch (...) {
        delete res;
        throw;
      }
    }
    *out = res;
    return MGH_OK;
  });
}

void mgh_holonomy_free(mgh_holonomy* h) { delete h; }

int mgh_holonomy_rank(const mgh_holonomy* h) { return h ? h->h.rank() : -1; }

int mgh_holonomy_depth(const mgh_holonomy* h) { return h ? h->depth : -1; }

int mgh_holonomy_converged(const mgh_holonomy* h) { return h && h->converged ? 1 : 0; }

int mgh_holonomy_generator(const mgh_holonomy* h, int index, double m[4]) {
  if (!h) return null_arg("holonomy");
  if (!m) return null_arg("m");
  if (index < 0 || index >= h->h.rank())
    return set_error(MGH_E_INVALID_ARGUMENT, "generator index out of range");
  const mgh::RMat& g = h->h.gens[index];
  m[0] = g.a;
  m[1] = g.b;
  m[2] = g.c;
  m[3] = g.d;
  g_last_error.clear();
  return MGH_OK;
}

int mgh_holonomy_trace(const mgh_holonomy* h, const char* curve, double* trace) {
  if (!h) return null_arg("holonomy");
  if (!curve) return null_arg("curve");
  if (!trace) return null_arg("trace");
  return guarded([&] {
    *trace = h->h.eval(h->h.curve(curve)).trace();
    return MGH_OK;
  });
}

}  // extern "C"
