#include "meridian/meridian.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "meridian/report.hpp"

namespace {

thread_local std::string g_last_error;

meridian_status fail(meridian_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

meridian_status translate(const std::exception& e) {
  using namespace meridian;
  if (dynamic_cast<const ConfigError*>(&e)) return fail(MERIDIAN_ERR_CONFIG, e.what());
  if (dynamic_cast<const NotAMeridian*>(&e)) return fail(MERIDIAN_ERR_NOT_MERIDIAN, e.what());
  return fail(MERIDIAN_ERR_EVAL, e.what());
}

}  // namespace

struct meridian_surface {
  meridian::AnalysisConfig config;
};

extern "C" {

const char* meridian_version(void) { return "1.0.0"; }

const char* meridian_last_error(void) { return g_last_error.c_str(); }

meridian_status meridian_surface_create(const char* config_json, meridian_surface** out) {
  if (!config_json || !out) return fail(MERIDIAN_ERR_INVALID_ARG, "null argument");
  *out = nullptr;
  try {
    auto handle = std::make_unique<meridian_surface>();
    handle->config = meridian::parse_config(config_json);
    *out = handle.release();
    return MERIDIAN_OK;
  } catch (const std::exception& e) {
    return translate(e);
  }
}

void meridian_surface_destroy(meridian_surface* surface) { delete surface; }

meridian_status meridian_eval_point(const meridian_surface* surface, double u, double v,
                                    meridian_point_report* out) {
  if (!surface || !out) return fail(MERIDIAN_ERR_INVALID_ARG, "null argument");
  try {
    using namespace meridian;
    const AnalysisConfig& cfg = surface->config;
    const Jet2 jet = cfg.surface.jet(u, v, cfg.policy);
    const AdaptedFrame frame = cfg.surface.frame(u, v, cfg.policy);
    const FirstFundamentalForm ff = first_form(jet, cfg.policy);
    const SecondFundamentalForm sff = second_form(jet, frame);
    const CurvatureReport rep = curvature_report(sff);
    const SemiParallelTensor sp = semiparallel_tensor(cfg.surface, u, v, cfg.policy);
    const StructuralResiduals sr = structural_residuals(cfg.surface, u, v, cfg.policy);
    *out = {u,
            v,
            ff.E,
            ff.F,
            ff.G,
            rep.K,
            rep.K_N,
            rep.H_norm,
            rep.umbilicity_deviation,
            rep.isotropy_deviation,
            rep.hH2_minus_3K,
            sp.residual_norm,
            sr.gauss,
            sr.ricci,
            sr.codazzi};
    return MERIDIAN_OK;
  } catch (const std::exception& e) {
    return translate(e);
  }
}

meridian_status meridian_analyze(const char* config_json, const char* out_path,
                                 const char* format) {
  if (!config_json || !out_path || !format)
    return fail(MERIDIAN_ERR_INVALID_ARG, "null argument");
  try {
    const meridian::AnalysisConfig cfg = meridian::parse_config(config_json);
    const meridian::AnalyzeResult result = meridian::run_analyze(cfg, format);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) return fail(MERIDIAN_ERR_EVAL, std::string("cannot open output file ") + out_path);
    out.write(result.bytes.data(), std::streamsize(result.bytes.size()));
    if (!out) return fail(MERIDIAN_ERR_EVAL, std::string("short write to ") + out_path);
    return MERIDIAN_OK;
  } catch (const std::exception& e) {
    return translate(e);
  }
}

meridian_status meridian_classify(const char* config_json, char* buf, size_t capacity,
                                  size_t* needed) {
  if (!config_json || (!buf && capacity > 0))
    return fail(MERIDIAN_ERR_INVALID_ARG, "null argument");
  try {
    const meridian::AnalysisConfig cfg = meridian::parse_config(config_json);
    const std::string doc = meridian::run_classify(cfg);
    if (needed) *needed = doc.size() + 1;
    if (capacity < doc.size() + 1)
      return fail(MERIDIAN_ERR_BUFFER, "classification buffer too small");
    std::memcpy(buf, doc.c_str(), doc.size() + 1);
    return MERIDIAN_OK;
  } catch (const std::exception& e) {
    return translate(e);
  }
}

meridian_status meridian_verify(const char* filter) {
  try {
    const int failed = meridian::run_verify(filter ? filter : "", std::cout);
    std::cout.flush();
    if (failed > 0)
      return fail(MERIDIAN_ERR_VERIFY_FAILED,
                  std::to_string(failed) + " verification group(s) failed");
    return MERIDIAN_OK;
  } catch (const std::exception& e) {
    return translate(e);
  }
}

}  // extern "C"
