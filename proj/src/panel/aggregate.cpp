#include "ahpeval/panel/panel.hpp"

#include <cmath>
#include <map>

#include "ahpeval/error.hpp"
#include "ahpeval/panel/digest.hpp"

namespace ahpeval::panel {

double log_geometric_mean(std::span<const ahp::Ratio> values) {
  if (values.empty()) throw Error(ErrorKind::kInvalidArgument, "geometric mean of nothing");
  double acc = 0.0;
  for (const auto& v : values) {
    acc += std::log(static_cast<double>(v.num())) - std::log(static_cast<double>(v.den()));
  }
  return acc / static_cast<double>(values.size());
}

JudgmentSet aggregate_roles(std::span<const JudgmentSet> sets) {
  if (sets.empty()) throw Error(ErrorKind::kInvalidArgument, "no judgment sets to aggregate");
  if (sets.size() == 1) {
    JudgmentSet out = sets.front();
    out.source = "consensus";
    return out;
  }

  const auto& reference = sets.front();
  for (const auto& s : sets) {
    bool same = s.judgments.size() == reference.judgments.size();
    for (std::size_t k = 0; same && k < s.judgments.size(); ++k) {
      same = s.judgments[k].first == reference.judgments[k].first &&
             s.judgments[k].second == reference.judgments[k].second;
    }
    if (!same) {
      throw Error(ErrorKind::kCoverageMismatch,
                  "judgment set from '" + s.source + "' covers different pairs than '" +
                      reference.source + "'");
    }
  }

  JudgmentSet out;
  out.source = "consensus";
  out.metadata.model = reference.metadata.model;
  out.metadata.timestamp = reference.metadata.timestamp;
  std::string digests;
  for (const auto& s : sets) digests += s.metadata.response_digest + "\n";
  out.metadata.response_digest = sha256_hex(digests);

  for (std::size_t k = 0; k < reference.judgments.size(); ++k) {
    std::vector<ahp::Ratio> values;
    std::string rationale;
    for (const auto& s : sets) {
      values.push_back(s.judgments[k].value.value());
      if (!rationale.empty()) rationale += " | ";
      rationale += "[" + s.source + "] " + s.judgments[k].rationale;
    }
    const double mean = std::exp(log_geometric_mean(values));
    out.judgments.push_back({reference.judgments[k].first, reference.judgments[k].second,
                             ahp::SaatyJudgment::nearest_in_log_space(mean), rationale});
  }
  return out;
}

}  // namespace ahpeval::panel
