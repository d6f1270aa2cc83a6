#include "csl/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "csl/lower_channels.hpp"
#include "csl/upper_channels.hpp"

namespace csl {
namespace {

std::vector<double> log_axis(double lo, double hi, int points) {
  std::vector<double> axis;
  axis.reserve(points);
  if (points == 1) {
    axis.push_back(lo);
    return axis;
  }
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < points; ++i)
    axis.push_back(lo * std::exp(ratio * i / (points - 1)));
  return axis;
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (const auto& f : flags) {
    if (!out.empty()) out += ';';
    out += f;
  }
  return out;
}

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Allowed: return "allowed";
    case Verdict::Excluded: return "excluded";
    case Verdict::LowerBoundUnmet: return "lower_bound_unmet";
    case Verdict::Flagged: return "flagged";
  }
  return "unknown";
}

const std::vector<std::string>& known_channel_ids() {
  static const std::vector<std::string> ids = {
      "photographic",        "etched_track",    "fullerene",
      "supercurrent",        "excitation_hydrogen", "excitation_proton",
      "excitation_ge",       "radiation_ge",    "cmb",
      "igm",                 "dust",            "planetary"};
  return ids;
}

bool is_known_channel(const std::string& id) {
  const auto& ids = known_channel_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ChannelResult evaluate_channel(const std::string& id, const CslParams& p,
                               const RunConfig& cfg) {
  if (id == "photographic") return photographic_lower_bound(p, EmulsionModel{});
  if (id == "etched_track") return etched_track_lower_bound(p, TrackModel{});
  if (id == "fullerene")
    return fullerene_bound(p, 1000, cfg.fullerene_grating_cm * un::cm);
  if (id == "supercurrent") return supercurrent_bound(p);
  if (id == "excitation_hydrogen")
    return excitation_bound(p, ExcitationTarget::hydrogen());
  if (id == "excitation_proton")
    return excitation_bound(p, ExcitationTarget::proton_constituent());
  if (id == "excitation_ge")
    return excitation_bound(p, ExcitationTarget::germanium_nuclear());
  if (id == "radiation_ge") return ge_radiation_bound(p);
  if (id == "cmb")
    return cmb_budget_bound(p, 1e9, 0.1, cfg.cmb_window_s * un::s);
  if (id == "igm")
    return igm_combined_bound(p, Cosmology::standard(),
                              IgmState{3.0, 2e4 * un::K},
                              IgmState{0.06, 5011.872336272722 * un::K},
                              cfg.igm_z0_age_s * un::s);
  if (id == "dust")
    return dust_grain_bound(p, cfg.dust_grain_temperature_k * un::K,
                            cfg.dust_kappa_prime);
  if (id == "planetary") return planetary_bound(p);
  throw std::out_of_range("unknown channel '" + id + "'");
}

Verdict classify(const ChannelResult& r, const CslParams& p) {
  const double lambda = p.lambda.in(un::per_s);
  const double bound = r.lambda_bound.in(un::per_s);
  const bool dubious =
      std::any_of(r.flags.begin(), r.flags.end(), [](const std::string& f) {
        return f.rfind("dubious", 0) == 0;
      });
  if (r.kind == BoundKind::UpperBound) {
    if (lambda <= bound) return Verdict::Allowed;
    return dubious ? Verdict::Flagged : Verdict::Excluded;
  }
  const double optimistic = bound * std::pow(10.0, -r.uncertainty_decades);
  return lambda < optimistic ? Verdict::LowerBoundUnmet : Verdict::Allowed;
}

ScanResult run_scan(const RunConfig& cfg, int jobs) {
  std::vector<std::string> channels =
      cfg.channels.empty() ? known_channel_ids() : cfg.channels;
  if (channels.empty()) throw ConfigError("scan needs at least one channel");
  for (const auto& id : channels)
    if (!is_known_channel(id)) throw std::out_of_range("unknown channel '" + id + "'");

  ScanResult out;
  out.lambda_axis =
      log_axis(cfg.grid.lambda_min, cfg.grid.lambda_max, cfg.grid.lambda_points);
  out.rc_axis = log_axis(cfg.grid.rc_min, cfg.grid.rc_max, cfg.grid.rc_points);
  const std::size_t nl = out.lambda_axis.size();
  const std::size_t nr = out.rc_axis.size();
  const std::size_t nc = channels.size();
  out.cells.resize(nl * nr * nc);

  auto worker = [&](std::size_t i_begin, std::size_t i_end) {
    for (std::size_t i = i_begin; i < i_end; ++i) {
      for (std::size_t j = 0; j < nr; ++j) {
        const CslParams p = CslParams::make(out.lambda_axis[i] * un::per_s,
                                            out.rc_axis[j] * un::cm);
        for (std::size_t k = 0; k < nc; ++k) {
          const ChannelResult r = evaluate_channel(channels[k], p, cfg);
          ScanCell& cell = out.cells[(i * nr + j) * nc + k];
          cell.lambda = out.lambda_axis[i];
          cell.r_c = out.rc_axis[j];
          cell.channel = channels[k];
          cell.verdict = classify(r, p);
          cell.bound = r.lambda_bound.in(un::per_s);
          cell.multiplier = r.multiplier_vs_standard;
          cell.flags = join_flags(r.flags);
        }
      }
    }
  };

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(nl)));
  if (workers == 1) {
    worker(0, nl);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (nl + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t b = std::min(nl, w * chunk);
      const std::size_t e = std::min(nl, b + chunk);
      if (b < e) pool.emplace_back(worker, b, e);
    }
    for (auto& t : pool) t.join();
  }
  return out;
}

std::string scan_to_csv(const ScanResult& s) {
  std::string out = "lambda_s_inv,r_c_cm,channel,verdict,bound_s_inv,multiplier,flags\n";
  for (const auto& c : s.cells) {
    out += fmt_g(c.lambda);
    out += ',';
    out += fmt_g(c.r_c);
    out += ',';
    out += c.channel;
    out += ',';
    out += verdict_name(c.verdict);
    out += ',';
    out += fmt_g(c.bound);
    out += ',';
    out += fmt_g(c.multiplier);
    out += ',';
    out += c.flags;
    out += '\n';
  }
  return out;
}

std::string scan_to_json(const ScanResult& s) {
  nlohmann::json j;
  j["lambda_axis"] = s.lambda_axis;
  j["rc_axis"] = s.rc_axis;
  auto cells = nlohmann::json::array();
  for (const auto& c : s.cells) {
    cells.push_back({{"lambda_s_inv", c.lambda},
                     {"r_c_cm", c.r_c},
                     {"channel", c.channel},
                     {"verdict", verdict_name(c.verdict)},
                     {"bound_s_inv", c.bound},
                     {"multiplier", c.multiplier},
                     {"flags", c.flags}});
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

}  // namespace csl
