#include "meridian/config.hpp"

#include <cmath>
#include <cstdlib>

#include <json.hpp>

namespace meridian {

namespace {

using nlohmann::json;

double num(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ConfigError(std::string("key '") + key + "' must be a number");
  return j.at(key).get<double>();
}

double require_num(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing required key '") + key + "'");
  if (!j.at(key).is_number()) throw ConfigError(std::string("key '") + key + "' must be a number");
  return j.at(key).get<double>();
}

std::string require_str(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ConfigError(std::string("missing required string key '") + key + "'");
  return j.at(key).get<std::string>();
}

CurveSpec parse_curve(const json& j) {
  const std::string kind = require_str(j, "kind");
  if (kind == "great_circle") return CurveSpec::great_circle();
  if (kind == "circle") return CurveSpec::circle(require_num(j, "kappa"));
  if (kind == "custom") {
    // Config-representable custom curves: kappa(v) = kappa0 + amp * sin(freq v).
    const double k0 = num(j, "kappa0", 0.0);
    const double amp = num(j, "kappa_sin_amp", 0.0);
    const double freq = num(j, "kappa_sin_freq", 1.0);
    return CurveSpec::custom([k0, amp, freq](double v) { return k0 + amp * std::sin(freq * v); });
  }
  throw ConfigError("curve.kind must be one of great_circle, circle, custom");
}

ProfileSpec parse_profile(const json& j) {
  const std::string kind = require_str(j, "kind");
  if (kind == "line")
    return ProfileSpec::line(require_num(j, "theta"), num(j, "f0", 0.0), num(j, "g0", 0.0));
  if (kind == "sphere_arc") return ProfileSpec::sphere_arc(require_num(j, "k"), num(j, "u0", 0.0));
  if (kind == "printed_sqrt")
    return ProfileSpec::printed_sqrt(require_num(j, "a"), require_num(j, "b"));
  if (kind == "custom")
    throw ConfigError("custom profiles are not representable in a config document; use the library API");
  throw ConfigError("profile.kind must be one of line, sphere_arc, printed_sqrt, custom");
}

Surface parse_immersion(const json& j) {
  const std::string kind = require_str(j, "kind");
  if (kind == "plane")
    return Surface::immersion([](double u, double v) { return Vec4{u, v, 0, 0}; }, "plane");
  if (kind == "graph_squares")
    return Surface::immersion([](double u, double v) { return Vec4{u, v, u * u, v * v}; },
                              "graph_squares");
  if (kind == "graph_product")
    return Surface::immersion(
        [](double u, double v) { return Vec4{u, v, u * v, 0.5 * (u * u - v * v)}; },
        "graph_product");
  throw ConfigError("immersion.kind must be one of plane, graph_squares, graph_product");
}

void parse_axis(const json& j, const char* key, double& lo, double& hi, int& count) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 3)
    throw ConfigError(std::string("grid.") + key + " must be a [min, max, count] triple");
  const json& t = j.at(key);
  lo = t.at(0).get<double>();
  hi = t.at(1).get<double>();
  count = t.at(2).get<int>();
}

}  // namespace

AnalysisConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");

  AnalysisConfig cfg;

  if (root.contains("policy")) {
    const json& p = root.at("policy");
    cfg.policy.fd_step = num(p, "fd_step", cfg.policy.fd_step);
    cfg.policy.richardson_levels = int(num(p, "richardson_levels", cfg.policy.richardson_levels));
    cfg.policy.residual_tol_numeric = num(p, "residual_tol_numeric", cfg.policy.residual_tol_numeric);
    cfg.policy.residual_tol_analytic =
        num(p, "residual_tol_analytic", cfg.policy.residual_tol_analytic);
    cfg.policy.frame_parallel_threshold =
        num(p, "frame_parallel_threshold", cfg.policy.frame_parallel_threshold);
    cfg.policy.f_min = num(p, "f_min", cfg.policy.f_min);
  }
  if (const char* env = std::getenv("MERIDIAN_FD_STEP")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || !(v > 0)) throw ConfigError("MERIDIAN_FD_STEP must be a positive number");
    cfg.policy.fd_step = v;
  }
  cfg.policy.validate();

  if (!root.contains("surface")) throw ConfigError("config requires a 'surface' object");
  const json& s = root.at("surface");
  const std::string family = require_str(s, "family");
  if (family == "meridian") {
    if (!s.contains("curve")) throw ConfigError("meridian surface requires 'curve'");
    if (!s.contains("profile")) throw ConfigError("meridian surface requires 'profile'");
    MeridianSpec ms{parse_curve(s.at("curve")), parse_profile(s.at("profile"))};
    cfg.surface = Surface::meridian(ms, cfg.policy.f_min);
  } else if (family == "immersion") {
    cfg.surface = parse_immersion(s);
  } else {
    throw ConfigError("surface.family must be 'meridian' or 'immersion'");
  }

  if (!root.contains("grid")) throw ConfigError("config requires a 'grid' object");
  parse_axis(root.at("grid"), "u", cfg.grid.u_min, cfg.grid.u_max, cfg.grid.u_count);
  parse_axis(root.at("grid"), "v", cfg.grid.v_min, cfg.grid.v_max, cfg.grid.v_count);
  cfg.grid.validate();

  if (root.contains("outputs")) {
    if (!root.at("outputs").is_array()) throw ConfigError("outputs must be an array of column names");
    for (const json& c : root.at("outputs")) cfg.columns.push_back(c.get<std::string>());
  }
  return cfg;
}

}  // namespace meridian
