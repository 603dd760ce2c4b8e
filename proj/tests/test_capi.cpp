#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "mgh/mgh.h"

namespace {

const std::string kDir = MGH_SCENARIO_DIR;

void collect(const char* line, void* user) {
  static_cast<std::vector<std::string>*>(user)->push_back(line);
}

struct ScenarioHandle {
  mgh_scenario* p = nullptr;
  explicit ScenarioHandle(const std::string& name) {
    REQUIRE(mgh_scenario_load((kDir + "/" + name).c_str(), &p) == MGH_OK);
  }
  ~ScenarioHandle() { mgh_scenario_free(p); }
};

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(mgh_status_name(MGH_OK)) == "ok");
  CHECK(std::string(mgh_status_name(MGH_E_VERIFY_FAILED)) == "verify-failed");
  CHECK(std::string(mgh_status_name(999)) == "unknown");
  for (int s = 1; s <= MGH_E_INTERNAL; ++s) CHECK(std::strlen(mgh_status_name(s)) > 0);
  CHECK(std::string(mgh_version()).size() > 0);
}

TEST_CASE("scenario handles") {
  mgh_scenario* sc = nullptr;
  CHECK(mgh_scenario_parse("{ \"format\": ", &sc) == MGH_E_PARSE);
  CHECK(sc == nullptr);
  CHECK(std::string(mgh_last_error()).rfind("line 1", 0) == 0);
  CHECK(mgh_scenario_load("/nonexistent/file.json", &sc) == MGH_E_IO);
  CHECK(mgh_scenario_parse(nullptr, &sc) == MGH_E_INVALID_ARGUMENT);

  ScenarioHandle h("torus_fn.json");
  CHECK(std::strlen(mgh_scenario_digest(h.p)) == 16);
  CHECK(mgh_scenario_punctures(h.p) == 1);
  mgh_scenario_free(nullptr);
}

TEST_CASE("run streams records through the callback") {
  ScenarioHandle h("torus_flow.json");
  mgh_run_options opt;
  mgh_run_options_init(&opt);
  std::vector<std::string> lines;
  REQUIRE(mgh_run("flow", h.p, &opt, collect, &lines) == MGH_OK);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].find("\"l\":[2.0]") != std::string::npos);
  CHECK(lines[3].find("\"sigma\":[-1]") != std::string::npos);

  lines.clear();
  CHECK(mgh_run("flow", nullptr, &opt, collect, &lines) == MGH_E_INVALID_ARGUMENT);
  CHECK(mgh_run("nope", h.p, &opt, collect, &lines) == MGH_E_INVALID_ARGUMENT);
  CHECK(mgh_run("flow", h.p, &opt, nullptr, nullptr) == MGH_E_INVALID_ARGUMENT);

  opt.has_rp = opt.has_rm = 1;
  opt.rp = 1;
  opt.rm = 0;
  lines.clear();
  REQUIRE(mgh_run("btz", nullptr, &opt, collect, &lines) == MGH_OK);
  CHECK(lines[0].find("\"M\":1.0,\"J\":0.0") != std::string::npos);
}

TEST_CASE("verify failure is reported as its own status") {
  mgh_run_options opt;
  mgh_run_options_init(&opt);
  opt.suite = "flow";
  std::vector<std::string> lines;
  CHECK(mgh_run("verify", nullptr, &opt, collect, &lines) == MGH_OK);
  opt.tol = 1e-300;  // below the finite-difference slope residual
  lines.clear();
  int st = mgh_run("verify", nullptr, &opt, collect, &lines);
  CHECK(st == MGH_E_VERIFY_FAILED);
  CHECK(lines.back().find("\"failed\":") != std::string::npos);
}

TEST_CASE("command table") {
  CHECK(mgh_command_count() == 10);
  CHECK(mgh_command_name(100) == nullptr);
  CHECK(mgh_command_needs_scenario("btz") == 0);
  CHECK(mgh_command_needs_scenario("quake") == 1);
  CHECK(mgh_command_needs_scenario("nope") == -1);
}

TEST_CASE("numeric helpers") {
  mgh_class k;
  const double hyp[4] = {2, 0, 0, 0.5};
  REQUIRE(mgh_classify(hyp, 0, &k) == MGH_OK);
  CHECK(k.kind == MGH_HYPERBOLIC);
  CHECK(k.translation_length == doctest::Approx(2 * std::log(2.0)));
  const double bad[4] = {1, 0, 0, -1};
  CHECK(mgh_classify(bad, 0, &k) == MGH_E_MALFORMED_MATRIX);

  mgh_btz b;
  REQUIRE(mgh_btz_from_radii(1.3, 0.6, &b) == MGH_OK);
  CHECK(b.M == doctest::Approx(1.3 * 1.3 + 0.6 * 0.6));
  CHECK(b.J == doctest::Approx(2 * 1.3 * 0.6));
  CHECK(mgh_btz_from_radii(0.5, 1.0, &b) == MGH_E_INVALID_ARGUMENT);
  REQUIRE(mgh_btz_from_horizon(1.9, 0.7, &b) == MGH_OK);
  CHECK(b.r_plus == doctest::Approx(1.3));
  CHECK(b.r_minus == doctest::Approx(0.6));

  const double l[4] = {std::exp(1.0), 0, 0, std::exp(-1.0)};
  const double r[4] = {std::exp(0.5), 0, 0, std::exp(-0.5)};
  double size = 0, mom = 0;
  REQUIRE(mgh_horizon(l, r, &size, &mom) == MGH_OK);
  CHECK(size > std::abs(mom));

  double img[4], g[9];
  REQUIRE(mgh_wick_point(2.0, 0.1, 0.2, 1.0, img, g) == MGH_OK);
  // Image lies on the hyperboloid -x0^2 + x1^2 + x2^2 + x3^2 = -1.
  CHECK(-img[0] * img[0] + img[1] * img[1] + img[2] * img[2] + img[3] * img[3] ==
        doctest::Approx(-1.0));
  CHECK(g[1] == doctest::Approx(g[3]));
  CHECK(mgh_wick_point(0.5, 0.1, 0.2, 1.0, img, nullptr) == MGH_E_OUT_OF_DOMAIN);
}

TEST_CASE("flow handles") {
  const double len[2] = {2.0, 0.0};
  const int eps[2] = {1, 1};
  const double I[2] = {1.0, 0.5};
  const int eta[2] = {1, 1};
  mgh_flow* f = nullptr;
  REQUIRE(mgh_flow_create(2, len, eps, I, eta, &f) == MGH_OK);
  CHECK(mgh_flow_punctures(f) == 2);
  mgh_flow_entry e;
  REQUIRE(mgh_flow_at(f, 3.0, 0, &e) == MGH_OK);
  CHECK(e.length == doctest::Approx(1.0));
  CHECK(e.sigma == -1);
  CHECK(e.critical_time == doctest::Approx(2.0));
  REQUIRE(mgh_flow_at(f, 2.0, 1, &e) == MGH_OK);
  CHECK(e.length == doctest::Approx(1.0));  // a cusp opens at rate I
  CHECK(e.sigma == -1);
  CHECK(mgh_flow_at(f, 1.0, 2, &e) == MGH_E_INVALID_ARGUMENT);
  CHECK(mgh_flow_at(f, -1.0, 0, &e) != MGH_OK);
  mgh_flow_free(f);

  const double neg[1] = {-1.0};
  CHECK(mgh_flow_create(1, neg, eps, I, eta, &f) == MGH_E_INVALID_ARGUMENT);

  ScenarioHandle h("torus_flow.json");
  REQUIRE(mgh_flow_from_scenario(h.p, &f) == MGH_OK);
  REQUIRE(mgh_flow_at(f, 1.0, 0, &e) == MGH_OK);
  CHECK(e.length == doctest::Approx(1.0));
  mgh_flow_free(f);
}

TEST_CASE("holonomy handles agree with the twist oracle") {
  ScenarioHandle h("torus_fn.json");
  mgh_holonomy *fu = nullptr, *ql = nullptr, *al = nullptr, *ar = nullptr;
  REQUIRE(mgh_holonomy_create(h.p, MGH_FUCHSIAN, 0, &fu) == MGH_OK);
  REQUIRE(mgh_holonomy_create(h.p, MGH_QUAKE_LEFT, 0, &ql) == MGH_OK);
  REQUIRE(mgh_holonomy_create(h.p, MGH_ADS_LEFT, 0, &al) == MGH_OK);
  REQUIRE(mgh_holonomy_create(h.p, MGH_ADS_RIGHT, 0, &ar) == MGH_OK);
  CHECK(mgh_holonomy_rank(fu) == 2);
  CHECK(mgh_holonomy_converged(ql) == 1);
  CHECK(mgh_holonomy_depth(ql) > 0);

  double m[4];
  REQUIRE(mgh_holonomy_generator(fu, 0, m) == MGH_OK);
  CHECK(m[0] * m[3] - m[1] * m[2] == doctest::Approx(1.0));
  CHECK(mgh_holonomy_generator(fu, 5, m) == MGH_E_INVALID_ARGUMENT);

  for (const char* curve : {"a", "b", "ab", "[a,b]"}) {
    double tq = 0, ta = 0;
    REQUIRE(mgh_holonomy_trace(ql, curve, &tq) == MGH_OK);
    REQUIRE(mgh_holonomy_trace(al, curve, &ta) == MGH_OK);
    CAPTURE(std::string(curve));
    CHECK(std::abs(std::abs(tq) - std::abs(ta)) < 1e-8);
  }
  double t;
  CHECK(mgh_holonomy_trace(fu, "[a,b]", &t) == MGH_OK);
  CHECK(std::abs(t) == doctest::Approx(2.0));  // the puncture is a cusp
  CHECK(mgh_holonomy_trace(fu, "nope", &t) != MGH_OK);
  mgh_holonomy* none = nullptr;
  CHECK(mgh_holonomy_create(h.p, 42, 0, &none) == MGH_E_INVALID_ARGUMENT);
  CHECK(none == nullptr);

  for (mgh_holonomy* p : {fu, ql, al, ar}) mgh_holonomy_free(p);
}
