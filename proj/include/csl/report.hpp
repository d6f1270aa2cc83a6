// Regression report: every quoted magnitude the engine reproduces, each as
// a row with the freshly computed value, the published target, and a
// per-row tolerance. The CLI renders the table and exits nonzero if any
// row fails.
#pragma once

#include <string>
#include <vector>

#include "csl/config.hpp"

namespace csl {

enum class TolKind {
  Relative,    ///< |computed/expected - 1| <= tolerance
  LogDecades,  ///< |log10(computed/expected)| <= tolerance
  AtLeast,     ///< computed >= expected (tolerance unused)
  Fixture      ///< stored constant; exact match
};

std::string tol_kind_name(TolKind k);

struct AnchorRow {
  std::string id;
  std::string channel;  ///< filter tag for --channel
  std::string description;
  double computed = 0.0;
  double expected = 0.0;
  TolKind kind = TolKind::Relative;
  double tolerance = 0.0;
  std::string unit;
  bool pass = false;
};

struct Report {
  std::vector<AnchorRow> rows;
  bool all_pass = false;
};

/// Applies the config's tolerance_scale: Relative and LogDecades tolerances
/// are multiplied by it, AtLeast compares computed * scale against the
/// threshold, Fixture rows ignore it.
bool row_passes(const AnchorRow& row, double tolerance_scale);

/// Evaluates the full catalog. The rows fix their own parameter points
/// (standard and the two enhanced cases); the config supplies the channel
/// model knobs and the tolerance scale.
Report build_report(const RunConfig& cfg);

/// Rows whose channel tag matches exactly.
Report filter_report(const Report& r, const std::string& channel);

std::string report_to_text(const Report& r);
std::string report_to_json(const Report& r);

}  // namespace csl
