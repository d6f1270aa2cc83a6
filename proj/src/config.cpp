#include "csl/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace csl {
namespace {

using nlohmann::json;

const char* const kDefaults = R"JSON({
  "config_version": 1,
  "case": "standard",
  "lambda": 0.0,
  "rc": 0.0,
  "channels": null,
  "format": "csv",
  "grid": {
    "lambda_min": 1e-18,
    "lambda_max": 1e-2,
    "lambda_points": 50,
    "rc_min": 1e-6,
    "rc_max": 1e-3,
    "rc_points": 50
  },
  "igm_z0_age_s": 4e17,
  "cmb_window_s": 3.15e17,
  "dust_grain_temperature_k": 20.0,
  "dust_kappa_prime": 0.05,
  "fullerene_grating_cm": 2.5e-5,
  "tolerance_scale": 1.0,
  "seed": 0
})JSON";

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

double positive_number(const json& j, const std::string& key) {
  if (!j.is_number()) fail("'" + key + "' must be a number");
  const double v = j.get<double>();
  if (!(v > 0.0)) fail("'" + key + "' must be positive");
  return v;
}

double nonnegative_number(const json& j, const std::string& key) {
  if (!j.is_number()) fail("'" + key + "' must be a number");
  const double v = j.get<double>();
  if (v < 0.0) fail("'" + key + "' must be >= 0");
  return v;
}

int point_count(const json& j, const std::string& key) {
  if (!j.is_number_integer()) fail("'" + key + "' must be an integer");
  const long long v = j.get<long long>();
  if (v < 1 || v > 100000) fail("'" + key + "' must be in [1, 100000]");
  return static_cast<int>(v);
}

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key()))
      fail("unknown key '" + item.key() + "' in " + where);
  }
}

GridConfig parse_grid(const json& j) {
  if (!j.is_object()) fail("'grid' must be an object");
  check_keys(j,
             {"lambda_min", "lambda_max", "lambda_points", "rc_min", "rc_max",
              "rc_points"},
             "grid");
  GridConfig g;
  if (j.contains("lambda_min")) g.lambda_min = positive_number(j["lambda_min"], "grid.lambda_min");
  if (j.contains("lambda_max")) g.lambda_max = positive_number(j["lambda_max"], "grid.lambda_max");
  if (j.contains("lambda_points")) g.lambda_points = point_count(j["lambda_points"], "grid.lambda_points");
  if (j.contains("rc_min")) g.rc_min = positive_number(j["rc_min"], "grid.rc_min");
  if (j.contains("rc_max")) g.rc_max = positive_number(j["rc_max"], "grid.rc_max");
  if (j.contains("rc_points")) g.rc_points = point_count(j["rc_points"], "grid.rc_points");
  if (g.lambda_max < g.lambda_min) fail("grid.lambda_max < grid.lambda_min");
  if (g.rc_max < g.rc_min) fail("grid.rc_max < grid.rc_min");
  if ((g.lambda_points > 1 && g.lambda_max == g.lambda_min) ||
      (g.rc_points > 1 && g.rc_max == g.rc_min))
    fail("grid with multiple points needs distinct axis endpoints");
  return g;
}

}  // namespace

CslParams RunConfig::params() const {
  CslParams p = CslParams::standard();
  if (case_label == "case1") {
    p = CslParams::case_i();
  } else if (case_label == "case2") {
    p = CslParams::case_ii();
  } else if (case_label != "standard") {
    fail("unknown case '" + case_label + "'");
  }
  const Qty lam = lambda_override > 0.0 ? lambda_override * un::per_s : p.lambda;
  const Qty rc = rc_override > 0.0 ? rc_override * un::cm : p.r_c;
  return CslParams::make(lam, rc);
}

const std::string& default_config_text() {
  static const std::string text = kDefaults;
  return text;
}

RunConfig default_config() { return config_from_json_text(default_config_text()); }

RunConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("config root must be an object");
  check_keys(j,
             {"config_version", "case", "lambda", "rc", "channels", "format",
              "grid", "igm_z0_age_s", "cmb_window_s",
              "dust_grain_temperature_k", "dust_kappa_prime",
              "fullerene_grating_cm", "tolerance_scale", "seed"},
             "config");

  RunConfig c;
  if (j.contains("config_version")) {
    if (!j["config_version"].is_number_integer())
      fail("'config_version' must be an integer");
    c.config_version = j["config_version"].get<int>();
    if (c.config_version != 1) fail("unsupported config_version");
  }
  if (j.contains("case")) {
    if (!j["case"].is_string()) fail("'case' must be a string");
    c.case_label = j["case"].get<std::string>();
    if (c.case_label != "standard" && c.case_label != "case1" &&
        c.case_label != "case2")
      fail("'case' must be one of standard, case1, case2");
  }
  if (j.contains("lambda") && !j["lambda"].is_null())
    c.lambda_override = nonnegative_number(j["lambda"], "lambda");
  if (j.contains("rc") && !j["rc"].is_null())
    c.rc_override = nonnegative_number(j["rc"], "rc");
  if (j.contains("channels") && !j["channels"].is_null()) {
    if (!j["channels"].is_array()) fail("'channels' must be an array");
    if (j["channels"].empty())
      fail("'channels', when given, must list at least one channel");
    for (const auto& ch : j["channels"]) {
      if (!ch.is_string()) fail("'channels' entries must be strings");
      c.channels.push_back(ch.get<std::string>());
    }
  }
  if (j.contains("format")) {
    if (!j["format"].is_string()) fail("'format' must be a string");
    c.format = j["format"].get<std::string>();
    if (c.format != "csv" && c.format != "json")
      fail("'format' must be csv or json");
  }
  if (j.contains("grid")) c.grid = parse_grid(j["grid"]);
  if (j.contains("igm_z0_age_s"))
    c.igm_z0_age_s = positive_number(j["igm_z0_age_s"], "igm_z0_age_s");
  if (j.contains("cmb_window_s"))
    c.cmb_window_s = positive_number(j["cmb_window_s"], "cmb_window_s");
  if (j.contains("dust_grain_temperature_k"))
    c.dust_grain_temperature_k =
        positive_number(j["dust_grain_temperature_k"], "dust_grain_temperature_k");
  if (j.contains("dust_kappa_prime"))
    c.dust_kappa_prime = positive_number(j["dust_kappa_prime"], "dust_kappa_prime");
  if (j.contains("fullerene_grating_cm"))
    c.fullerene_grating_cm =
        positive_number(j["fullerene_grating_cm"], "fullerene_grating_cm");
  if (j.contains("tolerance_scale"))
    c.tolerance_scale = nonnegative_number(j["tolerance_scale"], "tolerance_scale");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) fail("'seed' must be an integer");
    c.seed = j["seed"].get<long long>();
  }
  c.params();  // validates the case label eagerly
  return c;
}

RunConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

std::string config_to_json(const RunConfig& c) {
  json j;
  j["config_version"] = c.config_version;
  j["case"] = c.case_label;
  j["lambda"] = c.lambda_override;
  j["rc"] = c.rc_override;
  if (c.channels.empty()) {
    j["channels"] = nullptr;
  } else {
    j["channels"] = c.channels;
  }
  j["format"] = c.format;
  j["grid"] = {{"lambda_min", c.grid.lambda_min},
               {"lambda_max", c.grid.lambda_max},
               {"lambda_points", c.grid.lambda_points},
               {"rc_min", c.grid.rc_min},
               {"rc_max", c.grid.rc_max},
               {"rc_points", c.grid.rc_points}};
  j["igm_z0_age_s"] = c.igm_z0_age_s;
  j["cmb_window_s"] = c.cmb_window_s;
  j["dust_grain_temperature_k"] = c.dust_grain_temperature_k;
  j["dust_kappa_prime"] = c.dust_kappa_prime;
  j["fullerene_grating_cm"] = c.fullerene_grating_cm;
  j["tolerance_scale"] = c.tolerance_scale;
  j["seed"] = c.seed;
  return j.dump(2) + "\n";
}

}  // namespace csl
