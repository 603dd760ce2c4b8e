#ifndef MGH_MGH_H
#define MGH_MGH_H

/* C interface to the mgh library. Every function returning int returns an
 * mgh_status; on failure mgh_last_error() holds a message for the calling
 * thread. Handles are opaque and released with their matching _free. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MGH_BUILDING_LIBRARY)
#    define MGH_API __declspec(dllexport)
#  else
#    define MGH_API __declspec(dllimport)
#  endif
#else
#  define MGH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mgh_status {
  MGH_OK = 0,
  MGH_E_MALFORMED_MATRIX = 1,
  MGH_E_WRONG_CLASS = 2,
  MGH_E_INVALID_STRUCTURE = 3,
  MGH_E_DIMENSION_MISMATCH = 4,
  MGH_E_MALFORMED_TRIANGULATION = 5,
  MGH_E_UNSUPPORTED_CURVE = 6,
  MGH_E_BASE_POINT_ON_LEAF = 7,
  MGH_E_INVALID_LAMINATION = 8,
  MGH_E_NOT_CONVERGED = 9,
  MGH_E_OUT_OF_DOMAIN = 10,
  MGH_E_LIFT_FAILURE = 11,
  MGH_E_DEGENERATE_HORIZON = 12,
  MGH_E_AMBIGUOUS_SIDE = 13,
  MGH_E_COORDINATE_SINGULARITY = 14,
  MGH_E_NO_CHART_WITNESS = 15,
  MGH_E_PARSE = 16,
  MGH_E_INVALID_ARGUMENT = 17,
  MGH_E_VERIFY_FAILED = 18, /* mgh_run("verify"): some check failed */
  MGH_E_IO = 19,
  MGH_E_INTERNAL = 20
} mgh_status;

MGH_API const char* mgh_version(void);
MGH_API const char* mgh_status_name(int status);
/* Message of the last failing call on this thread; "" if none. */
MGH_API const char* mgh_last_error(void);

/* ---- scenarios ---------------------------------------------------------- */

typedef struct mgh_scenario mgh_scenario;

MGH_API int mgh_scenario_parse(const char* text, mgh_scenario** out);
MGH_API int mgh_scenario_load(const char* path, mgh_scenario** out);
MGH_API void mgh_scenario_free(mgh_scenario* sc);
/* 16 hex digits; owned by the handle. */
MGH_API const char* mgh_scenario_digest(const mgh_scenario* sc);
MGH_API int mgh_scenario_punctures(const mgh_scenario* sc);

/* ---- batch commands ----------------------------------------------------- */

typedef struct mgh_run_options {
  int depth;            /* 0: module default */
  double tol;           /* 0: module default */
  const char* mesh_out; /* NULL or "": no mesh */
  const char* grid;     /* NULL or "": command default */
  const char* suite;    /* verify; NULL means "all" */
  const char* model;    /* bend: "hyp" or "ads" */
  int has_rp;
  double rp;
  int has_rm;
  double rm;
} mgh_run_options;

MGH_API void mgh_run_options_init(mgh_run_options* opt);

/* One JSON record per call, without a trailing newline. */
typedef void (*mgh_record_fn)(const char* record, void* user);

MGH_API size_t mgh_command_count(void);
MGH_API const char* mgh_command_name(size_t index);
/* 1 if the command reads a scenario, 0 if not, -1 for an unknown command. */
MGH_API int mgh_command_needs_scenario(const char* command);

/* sc may be NULL for commands that do not need one; opt may be NULL. */
MGH_API int mgh_run(const char* command, const mgh_scenario* sc, const mgh_run_options* opt,
                    mgh_record_fn sink, void* user);

/* ---- isometries and horizons -------------------------------------------- */

enum { MGH_IDENTITY = 0, MGH_ELLIPTIC = 1, MGH_PARABOLIC = 2, MGH_HYPERBOLIC = 3 };

typedef struct mgh_class {
  int kind;
  double trace; /* |tr| after normalization to det 1 */
  double translation_length;
  double rotation_angle;
  double fixed_attracting; /* +inf stands for the point at infinity */
  double fixed_repelling;
} mgh_class;

/* m = {a, b, c, d} of a real 2x2 matrix with positive determinant. tol <= 0
 * selects the default classification tolerance. */
MGH_API int mgh_classify(const double m[4], double tol, mgh_class* out);

typedef struct mgh_btz {
  double r_plus, r_minus, M, J;
} mgh_btz;

MGH_API int mgh_btz_from_radii(double r_plus, double r_minus, mgh_btz* out);
MGH_API int mgh_btz_from_horizon(double size, double momentum, mgh_btz* out);
/* Size and momentum of the horizon of a hyperbolic pair (left, right). */
MGH_API int mgh_horizon(const double left[4], const double right[4], double* size,
                        double* momentum);

/* Image of (T, u, zeta) under the Wick rotation, timelike coordinate first,
 * and the pulled-back metric in the order (T, zeta, u), row-major. Either
 * output may be NULL. */
MGH_API int mgh_wick_point(double T, double u, double zeta, double alpha0, double image[4],
                           double metric[9]);

/* ---- quake flow --------------------------------------------------------- */

typedef struct mgh_flow mgh_flow;

typedef struct mgh_flow_entry {
  double length;
  double enhanced_length;
  double enhanced_spectrum;
  double critical_time;
  int eps, eta, sigma, cusp;
} mgh_flow_entry;

MGH_API int mgh_flow_create(size_t punctures, const double* length, const int* eps,
                            const double* spectrum, const int* eta, mgh_flow** out);
MGH_API int mgh_flow_from_scenario(const mgh_scenario* sc, mgh_flow** out);
MGH_API void mgh_flow_free(mgh_flow* f);
MGH_API int mgh_flow_punctures(const mgh_flow* f);
MGH_API int mgh_flow_at(const mgh_flow* f, double t, int puncture, mgh_flow_entry* out);

/* ---- holonomies --------------------------------------------------------- */

typedef enum mgh_deformation {
  MGH_FUCHSIAN = 0,
  MGH_QUAKE_LEFT = 1,
  MGH_QUAKE_RIGHT = 2,
  MGH_ADS_LEFT = 3,
  MGH_ADS_RIGHT = 4
} mgh_deformation;

typedef struct mgh_holonomy mgh_holonomy;

/* Deformations other than MGH_FUCHSIAN use the scenario's lamination. */
MGH_API int mgh_holonomy_create(const mgh_scenario* sc, int deformation, int depth,
                                mgh_holonomy** out);
MGH_API void mgh_holonomy_free(mgh_holonomy* h);
MGH_API int mgh_holonomy_rank(const mgh_holonomy* h);
MGH_API int mgh_holonomy_depth(const mgh_holonomy* h);
MGH_API int mgh_holonomy_converged(const mgh_holonomy* h);
MGH_API int mgh_holonomy_generator(const mgh_holonomy* h, int index, double m[4]);
/* Trace of a named dictionary curve such as "a", "ab", "[a,b]" or "C0". */
MGH_API int mgh_holonomy_trace(const mgh_holonomy* h, const char* curve, double* trace);

#ifdef __cplusplus
}
#endif

#endif
