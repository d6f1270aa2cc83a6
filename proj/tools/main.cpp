// Command-line surface: regression report of the reproduced magnitudes,
// (lambda, r_C) exclusion-grid scanner, single-channel evaluation, and the
// independent numerical cross-check battery.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "csl/config.hpp"
#include "csl/oracle.hpp"
#include "csl/report.hpp"
#include "csl/scan.hpp"
#include "csl/upper_channels.hpp"

namespace {

constexpr int kExitAllPass = 0;
constexpr int kExitRegression = 1;
constexpr int kExitConfig = 2;
constexpr int kExitUnknownChannel = 3;

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string case_label;
  double lambda = 0.0;
  double rc = 0.0;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_params) {
  cmd->add_option("--config", f.config_path, "JSON config file");
  cmd->add_option("--out", f.out_path, "output file (default stdout)");
  cmd->add_option("--format", f.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  if (with_params) {
    cmd->add_option("--case", f.case_label, "parameter case")
        ->check(CLI::IsMember({"standard", "case1", "case2"}));
    cmd->add_option("--lambda", f.lambda, "reduction rate override, s^-1");
    cmd->add_option("--rc", f.rc, "correlation length override, cm");
  }
}

csl::RunConfig load_config(const CommonFlags& f) {
  csl::RunConfig cfg = f.config_path.empty()
                           ? csl::default_config()
                           : csl::config_from_file(f.config_path);
  if (!f.case_label.empty()) cfg.case_label = f.case_label;
  if (f.lambda != 0.0) {
    if (f.lambda < 0.0) throw csl::ConfigError("--lambda must be positive");
    cfg.lambda_override = f.lambda;
  }
  if (f.rc != 0.0) {
    if (f.rc < 0.0) throw csl::ConfigError("--rc must be positive");
    cfg.rc_override = f.rc;
  }
  if (!f.format.empty()) cfg.format = f.format;
  return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw csl::ConfigError("cannot write '" + out_path + "'");
  out << text;
}

/// Derives the sibling artifact names from --out: a trailing .csv or .json
/// is stripped and both extensions are emitted.
std::pair<std::string, std::string> scan_artifact_paths(const std::string& out) {
  std::string stem = out;
  for (const char* ext : {".csv", ".json"}) {
    const std::string e = ext;
    if (stem.size() > e.size() &&
        stem.compare(stem.size() - e.size(), e.size(), e) == 0) {
      stem.resize(stem.size() - e.size());
      break;
    }
  }
  return {stem + ".csv", stem + ".json"};
}

int run_report(const CommonFlags& f, const std::string& channel) {
  const csl::RunConfig cfg = load_config(f);
  csl::Report rep = csl::build_report(cfg);
  if (!channel.empty()) rep = csl::filter_report(rep, channel);
  emit(cfg.format == "json" ? csl::report_to_json(rep)
                            : csl::report_to_text(rep),
       f.out_path);
  return rep.all_pass ? kExitAllPass : kExitRegression;
}

int run_scan(const CommonFlags& f, int jobs) {
  const csl::RunConfig cfg = load_config(f);
  const csl::ScanResult grid = csl::run_scan(cfg, jobs);
  if (f.out_path.empty()) {
    std::cout << (cfg.format == "json" ? csl::scan_to_json(grid)
                                       : csl::scan_to_csv(grid));
    return kExitAllPass;
  }
  const auto [csv_path, json_path] = scan_artifact_paths(f.out_path);
  emit(csl::scan_to_csv(grid), csv_path);
  emit(csl::scan_to_json(grid), json_path);
  return kExitAllPass;
}

int run_eval(const CommonFlags& f, const std::string& channel, double tg,
             double kappa) {
  if (!csl::is_known_channel(channel)) {
    std::cerr << "unknown channel '" << channel << "'\n";
    return kExitUnknownChannel;
  }
  csl::RunConfig cfg = load_config(f);
  if (tg != 0.0) {
    if (tg < 0.0) throw csl::ConfigError("--Tg must be positive");
    cfg.dust_grain_temperature_k = tg;
  }
  if (kappa != 0.0) {
    if (kappa < 0.0) throw csl::ConfigError("--kappa must be positive");
    cfg.dust_kappa_prime = kappa;
  }
  const csl::CslParams p = cfg.params();
  const csl::ChannelResult r = csl::evaluate_channel(channel, p, cfg);
  const csl::Verdict v = csl::classify(r, p);

  nlohmann::json j;
  j["channel"] = r.channel_id;
  j["kind"] = r.kind == csl::BoundKind::UpperBound ? "upper" : "lower";
  j["lambda_s_inv"] = p.lambda.in(csl::un::per_s);
  j["r_c_cm"] = p.r_c.in(csl::un::cm);
  j["bound_s_inv"] = r.lambda_bound.in(csl::un::per_s);
  j["multiplier_vs_standard"] = r.multiplier_vs_standard;
  j["uncertainty_decades"] = r.uncertainty_decades;
  j["verdict"] = csl::verdict_name(v);
  j["flags"] = r.flags;
  j["notes"] = r.notes;
  if (channel == "supercurrent")
    j["predicted_decay_s_inv"] =
        csl::supercurrent_decay_rate(p).in(csl::un::per_s);
  if (channel == "dust")
    j["radiated_power_ev_s_cm3"] =
        csl::dust_radiated_power_density(cfg.dust_grain_temperature_k * csl::un::K,
                                         cfg.dust_kappa_prime)
            .in(csl::constants().eV * csl::un::per_s * csl::un::per_cm3);

  if (cfg.format == "json") {
    emit(j.dump(2) + "\n", f.out_path);
  } else {
    char line[256];
    std::string text;
    std::snprintf(line, sizeof line, "channel      %s (%s bound)\n",
                  r.channel_id.c_str(),
                  r.kind == csl::BoundKind::UpperBound ? "upper" : "lower");
    text += line;
    std::snprintf(line, sizeof line, "parameters   lambda %.6g s^-1, r_C %.6g cm\n",
                  p.lambda.in(csl::un::per_s), p.r_c.in(csl::un::cm));
    text += line;
    std::snprintf(line, sizeof line, "bound        %.6g s^-1 (%.6g x standard)\n",
                  r.lambda_bound.in(csl::un::per_s), r.multiplier_vs_standard);
    text += line;
    std::snprintf(line, sizeof line, "verdict      %s\n",
                  csl::verdict_name(v).c_str());
    text += line;
    if (j.contains("predicted_decay_s_inv")) {
      std::snprintf(line, sizeof line, "decay rate   %.6g s^-1\n",
                    j["predicted_decay_s_inv"].get<double>());
      text += line;
    }
    if (j.contains("radiated_power_ev_s_cm3")) {
      std::snprintf(line, sizeof line, "radiated W   %.6g eV s^-1 cm^-3\n",
                    j["radiated_power_ev_s_cm3"].get<double>());
      text += line;
    }
    if (!r.notes.empty()) text += "notes        " + r.notes + "\n";
    emit(text, f.out_path);
  }
  return kExitAllPass;
}

int run_oracle(const CommonFlags& f) {
  const csl::RunConfig cfg = load_config(f);
  const auto checks = csl::run_oracle_checks(cfg.params());
  std::string text;
  char line[256];
  bool all = true;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line,
                  "%-4s %-44s computed %.12e expected %.12e deviation %.3e\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.computed,
                  c.expected, c.deviation);
    text += line;
    all = all && c.pass;
  }
  std::snprintf(line, sizeof line, "%s\n", all ? "all checks pass" : "FAILURES");
  text += line;
  emit(text, f.out_path);
  return all ? kExitAllPass : kExitRegression;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collapse-model parameter bound engine"};
  app.require_subcommand(1);

  CommonFlags report_flags, scan_flags, eval_flags, oracle_flags;
  std::string report_channel, eval_channel;
  int jobs = 1;

  CLI::App* report_cmd =
      app.add_subcommand("report", "regression table of reproduced values");
  add_common(report_cmd, report_flags, false);
  report_cmd->add_option("--channel", report_channel, "only rows with this tag");

  CLI::App* scan_cmd =
      app.add_subcommand("scan", "evaluate channels over a (lambda, r_C) grid");
  add_common(scan_cmd, scan_flags, false);
  scan_cmd->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::Range(1, 64));

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a single channel");
  add_common(eval_cmd, eval_flags, true);
  eval_cmd->add_option("channel", eval_channel, "channel id")->required();
  double tg = 0.0, kappa = 0.0;
  eval_cmd->add_option("--Tg", tg, "dust grain temperature, K");
  eval_cmd->add_option("--kappa", kappa, "dust emissivity coefficient");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "independent numerical cross-checks");
  add_common(oracle_cmd, oracle_flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (report_cmd->parsed()) return run_report(report_flags, report_channel);
    if (scan_cmd->parsed()) return run_scan(scan_flags, jobs);
    if (eval_cmd->parsed()) return run_eval(eval_flags, eval_channel, tg, kappa);
    if (oracle_cmd->parsed()) return run_oracle(oracle_flags);
  } catch (const csl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return kExitUnknownChannel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegression;
  }
  return kExitConfig;
}
