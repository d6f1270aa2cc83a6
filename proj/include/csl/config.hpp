// Run configuration: parameter case selection, channel enablement, model
// overrides, and grid geometry for the scanner. A single JSON document with
// a whitelisted schema; the embedded defaults make a zero-argument run
// reproducible.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "csl/cslcore.hpp"

namespace csl {

/// Schema violation, unknown key, or out-of-range value. The CLI maps this
/// to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Log-spaced rectangle in the (lambda, r_C) plane.
struct GridConfig {
  double lambda_min = 1e-18;  ///< s^-1
  double lambda_max = 1e-2;
  int lambda_points = 50;
  double rc_min = 1e-6;  ///< cm
  double rc_max = 1e-3;
  int rc_points = 50;
};

struct RunConfig {
  int config_version = 1;
  /// "standard", "case1", or "case2"; overrides below refine it.
  std::string case_label = "standard";
  double lambda_override = 0.0;  ///< s^-1; > 0 replaces the case value
  double rc_override = 0.0;      ///< cm; > 0 replaces the case value
  /// Channel ids to evaluate; empty means every registered channel. An
  /// explicit empty list in the JSON is rejected.
  std::vector<std::string> channels;
  std::string format = "csv";  ///< "csv" or "json"
  GridConfig grid;

  // Channel model knobs surfaced in the schema. Horizons are separate on
  // purpose; the channels accumulate over different epochs.
  double igm_z0_age_s = 4e17;
  double cmb_window_s = 3.15e17;
  double dust_grain_temperature_k = 20.0;
  double dust_kappa_prime = 0.05;
  double fullerene_grating_cm = 2.5e-5;

  /// Multiplies every regression tolerance; 0 turns each row into an
  /// exact-match check (deliberate-failure plumbing test).
  double tolerance_scale = 1.0;
  /// Reserved for future stochastic extensions; accepted and ignored.
  long long seed = 0;

  /// Case label plus overrides resolved to concrete parameters.
  CslParams params() const;
};

/// The embedded defaults document, parseable by config_from_json_text.
const std::string& default_config_text();

RunConfig default_config();
RunConfig config_from_json_text(const std::string& text);
RunConfig config_from_file(const std::string& path);
std::string config_to_json(const RunConfig& c);

}  // namespace csl
