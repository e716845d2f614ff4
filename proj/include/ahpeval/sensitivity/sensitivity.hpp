#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ahpeval/ahp/weights.hpp"
#include "ahpeval/criteria/scoring.hpp"

namespace ahpeval::sensitivity {

// One-at-a-time perturbation: the target weight moves by `delta`, every
// other weight is rescaled by (1 - w_t - delta) / (1 - w_t).
struct PerturbationSpec {
  std::string target_criterion;
  double delta = 0.0;
};

// Throws kOutOfRangePerturbation when w_t + delta leaves [0, 1] and
// kNotFound for an unknown target.
ahp::WeightVector perturb_weights(const ahp::WeightVector& w, const PerturbationSpec& spec);

struct RankEntry {
  std::string alternative;
  double composite = 0.0;
  std::size_t rank = 0;  // 1-based; tied entries share a rank
  bool tied = false;
  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

struct Ranking {
  std::vector<RankEntry> entries;
  std::vector<std::string> order() const;
  bool has_ties() const;
  friend bool operator==(const Ranking&, const Ranking&) = default;
};

// Composites within this distance count as tied.
inline constexpr double kTieTolerance = 1e-12;

// Descending composite recomputed under `w`; ties ordered by name and
// flagged. Throws kSetMismatch for evaluations on different sets or modes.
Ranking rank_alternatives(std::span<const criteria::Evaluation> evaluations,
                          const ahp::WeightVector& w);

struct PerturbationRanking {
  std::string criterion;
  double delta = 0.0;
  std::vector<std::string> order;
  friend bool operator==(const PerturbationRanking&, const PerturbationRanking&) = default;
};

// `ahead` led `behind` on the inward neighbouring grid point and trails it
// at `delta`; `crossing` is the bisected swap point.
struct ReversalEvent {
  std::string criterion;
  double delta = 0.0;
  double crossing = 0.0;
  std::string ahead;
  std::string behind;
  friend bool operator==(const ReversalEvent&, const ReversalEvent&) = default;
};

struct Criticality {
  std::string criterion;
  std::optional<double> delta;  // signed; empty means none within range
  friend bool operator==(const Criticality&, const Criticality&) = default;
};

struct SweepOptions {
  double range = 0.15;
  int steps = 61;  // grid points over [-range, +range], inclusive
  double bisection_tolerance = 1e-7;
};

struct SensitivityReport {
  double range = 0.0;
  int steps = 0;
  std::vector<std::string> baseline;
  std::vector<PerturbationRanking> rankings;
  std::vector<ReversalEvent> reversal_events;
  std::vector<Criticality> criticality;  // one per criterion, weight order
  friend bool operator==(const SensitivityReport&, const SensitivityReport&) = default;
};

SensitivityReport analyze(std::span<const criteria::Evaluation> evaluations,
                          const ahp::WeightVector& w, const SweepOptions& options = {});

}  // namespace ahpeval::sensitivity
