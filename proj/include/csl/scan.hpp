// Exclusion-grid scanner: evaluates every enabled constraint channel over a
// log-spaced (lambda, r_C) rectangle and classifies each cell. Output is
// deterministic long-form CSV or JSON, byte-identical across runs and
// worker counts.
#pragma once

#include <string>
#include <vector>

#include "csl/channel.hpp"
#include "csl/config.hpp"

namespace csl {

enum class Verdict {
  Allowed,
  Excluded,         ///< upper channel: lambda above the bound
  LowerBoundUnmet,  ///< lower channel: lambda below even the optimistic edge
  Flagged           ///< disavowed channel exceeded; never counts as excluded
};

std::string verdict_name(Verdict v);

/// The registered channel ids, in emission order.
const std::vector<std::string>& known_channel_ids();
bool is_known_channel(const std::string& id);

/// Unknown id throws std::out_of_range (CLI exit 3).
ChannelResult evaluate_channel(const std::string& id, const CslParams& p,
                               const RunConfig& cfg);

/// Upper bounds exclude above the central value; lower bounds are unmet
/// only below bound / 10^uncertainty (the most permissive reading, so the
/// verdict never overstates the tension). Channels carrying the "dubious"
/// flag map exceedance to Flagged.
Verdict classify(const ChannelResult& r, const CslParams& p);

struct ScanCell {
  double lambda = 0.0;  ///< s^-1
  double r_c = 0.0;     ///< cm
  std::string channel;
  Verdict verdict = Verdict::Allowed;
  double bound = 0.0;  ///< s^-1
  double multiplier = 0.0;
  std::string flags;  ///< ';'-joined
};

struct ScanResult {
  std::vector<double> lambda_axis;
  std::vector<double> rc_axis;
  /// lambda-major, then r_C, then channel registration order.
  std::vector<ScanCell> cells;
};

/// jobs > 1 splits the lambda axis across threads; cells land in
/// preallocated slots so the output order never depends on scheduling.
ScanResult run_scan(const RunConfig& cfg, int jobs = 1);

std::string scan_to_csv(const ScanResult& s);
std::string scan_to_json(const ScanResult& s);

}  // namespace csl
