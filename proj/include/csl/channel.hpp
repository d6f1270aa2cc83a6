// Common result record for every constraint channel: the bound it places on
// the reduction rate parameter, expressed both absolutely and as a multiple
// of the conventional value.
#pragma once

#include <string>
#include <vector>

#include "csl/units.hpp"

namespace csl {

enum class BoundKind { LowerBound, UpperBound };

struct ChannelResult {
  std::string channel_id;
  BoundKind kind = BoundKind::UpperBound;
  Qty lambda_bound{0.0, dim::rate};
  /// lambda_bound / (2.2e-17 s^-1); kept equal to that ratio by construction.
  double multiplier_vs_standard = 0.0;
  /// Order-of-magnitude uncertainty as +/- decades on the bound.
  double uncertainty_decades = 0.0;
  std::string notes;
  std::vector<std::string> refs;
  std::vector<std::string> flags;
};

/// The conventional reduction rate 2.2e-17 s^-1 all multipliers refer to.
const Qty& standard_lambda();

/// Builds a result with the multiplier derived from the bound.
ChannelResult make_channel_result(std::string channel_id, BoundKind kind,
                                  Qty lambda_bound, double uncertainty_decades,
                                  std::string notes,
                                  std::vector<std::string> refs = {},
                                  std::vector<std::string> flags = {});

}  // namespace csl
