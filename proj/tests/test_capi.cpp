#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "meridian/meridian.h"

namespace {

const char* kSphereArcConfig = R"({
  "surface": {
    "family": "meridian",
    "curve": {"kind": "great_circle"},
    "profile": {"kind": "sphere_arc", "k": 1.0}
  },
  "grid": {"u": [0.7853981633974483, 1.5707963267948966, 4], "v": [0.0, 1.0, 3]}
})";

std::string slurp(const char* path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("version and initial last-error are non-null") {
  CHECK(meridian_version() != nullptr);
  CHECK(meridian_last_error() != nullptr);
}

TEST_CASE("surface lifecycle and point evaluation") {
  meridian_surface* s = nullptr;
  REQUIRE(meridian_surface_create(kSphereArcConfig, &s) == MERIDIAN_OK);
  REQUIRE(s != nullptr);

  meridian_point_report rep{};
  CHECK(meridian_eval_point(s, M_PI / 2, 0.0, &rep) == MERIDIAN_OK);
  CHECK(rep.E == doctest::Approx(1.0));
  CHECK(rep.G == doctest::Approx(1.0));
  CHECK(rep.K == doctest::Approx(1.0));
  CHECK(rep.K_N == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(rep.H_norm == doctest::Approx(1.0));
  CHECK(rep.sp_residual < 1e-10);

  // Evaluating at the pole is an evaluation error, not a crash.
  CHECK(meridian_eval_point(s, 0.0, 0.0, &rep) == MERIDIAN_ERR_EVAL);
  CHECK(std::strlen(meridian_last_error()) > 0);

  CHECK(meridian_eval_point(nullptr, 0.0, 0.0, &rep) == MERIDIAN_ERR_INVALID_ARG);
  meridian_surface_destroy(s);
  meridian_surface_destroy(nullptr);  // must be a no-op
}

TEST_CASE("create rejects bad configs with the config status") {
  meridian_surface* s = nullptr;
  CHECK(meridian_surface_create("{", &s) == MERIDIAN_ERR_CONFIG);
  CHECK(s == nullptr);
  CHECK(meridian_surface_create(nullptr, &s) == MERIDIAN_ERR_INVALID_ARG);
}

TEST_CASE("analyze writes a deterministic file") {
  const char* path = "capi_analyze_test.csv";
  REQUIRE(meridian_analyze(kSphereArcConfig, path, "csv") == MERIDIAN_OK);
  const std::string first = slurp(path);
  CHECK(first.rfind("u,v,E,F,G,K,", 0) == 0);
  REQUIRE(meridian_analyze(kSphereArcConfig, path, "csv") == MERIDIAN_OK);
  CHECK(slurp(path) == first);
  std::remove(path);

  CHECK(meridian_analyze(kSphereArcConfig, path, "xml") == MERIDIAN_ERR_CONFIG);
  CHECK(meridian_analyze(kSphereArcConfig, nullptr, "csv") == MERIDIAN_ERR_INVALID_ARG);
}

TEST_CASE("classify reports buffer requirements and fills the document") {
  size_t needed = 0;
  CHECK(meridian_classify(kSphereArcConfig, nullptr, 0, &needed) == MERIDIAN_ERR_BUFFER);
  REQUIRE(needed > 2);

  std::vector<char> buf(needed);
  REQUIRE(meridian_classify(kSphereArcConfig, buf.data(), buf.size(), &needed) == MERIDIAN_OK);
  const std::string doc(buf.data());
  CHECK(doc.find("\"case\": \"I\"") != std::string::npos);
  CHECK(doc.find("\"theorem2_branch\": \"case_ii\"") != std::string::npos);
  CHECK(doc.find("\"semi_parallel\": true") != std::string::npos);

  const char* plane = R"({
    "surface": {"family": "immersion", "kind": "plane"},
    "grid": {"u": [0, 1, 3], "v": [0, 1, 3]}
  })";
  CHECK(meridian_classify(plane, buf.data(), buf.size(), &needed) ==
        MERIDIAN_ERR_NOT_MERIDIAN);
}

TEST_CASE("verify runs a filtered group through the C boundary") {
  CHECK(meridian_verify("frames") == MERIDIAN_OK);
}
