#include "csl/channel.hpp"

namespace csl {

const Qty& standard_lambda() {
  static const Qty v = 2.2e-17 * un::per_s;
  return v;
}

ChannelResult make_channel_result(std::string channel_id, BoundKind kind,
                                  Qty lambda_bound, double uncertainty_decades,
                                  std::string notes,
                                  std::vector<std::string> refs,
                                  std::vector<std::string> flags) {
  require_dim(lambda_bound, dim::rate, "channel bound");
  ChannelResult r;
  r.channel_id = std::move(channel_id);
  r.kind = kind;
  r.lambda_bound = lambda_bound;
  r.multiplier_vs_standard = ratio(lambda_bound, standard_lambda());
  r.uncertainty_decades = uncertainty_decades;
  r.notes = std::move(notes);
  r.refs = std::move(refs);
  r.flags = std::move(flags);
  return r;
}

}  // namespace csl
