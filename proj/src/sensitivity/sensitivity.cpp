#include "ahpeval/sensitivity/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ahpeval/error.hpp"

namespace ahpeval::sensitivity {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

}  // namespace

ahp::WeightVector perturb_weights(const ahp::WeightVector& w, const PerturbationSpec& spec) {
  const auto t = w.index_of(spec.target_criterion);
  if (t == w.size()) {
    throw Error(ErrorKind::kNotFound, "unknown criterion '" + spec.target_criterion + "'");
  }
  const double wt = w.weights[t];
  double target = wt + spec.delta;
  if (target < -kFeasibilitySlack || target > 1.0 + kFeasibilitySlack) {
    throw Error(ErrorKind::kOutOfRangePerturbation,
                "perturbing " + spec.target_criterion + " by " + std::to_string(spec.delta) +
                    " leaves [0, 1]");
  }
  target = std::clamp(target, 0.0, 1.0);

  ahp::WeightVector out = w;
  const double rest = 1.0 - wt;
  const double new_rest = 1.0 - target;
  const std::size_t others = w.size() - 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k == t) {
      out.weights[k] = target;
    } else if (rest > 0.0) {
      out.weights[k] = w.weights[k] * (new_rest / rest);
    } else {
      out.weights[k] = new_rest / static_cast<double>(others);
    }
  }
  return out;
}

std::vector<std::string> Ranking::order() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.alternative);
  return out;
}

bool Ranking::has_ties() const {
  return std::any_of(entries.begin(), entries.end(), [](const RankEntry& e) { return e.tied; });
}

Ranking rank_alternatives(std::span<const criteria::Evaluation> evaluations,
                          const ahp::WeightVector& w) {
  Ranking ranking;
  for (const auto& e : evaluations) {
    if (e.criteria_set != evaluations.front().criteria_set ||
        e.normalization != evaluations.front().normalization) {
      throw Error(ErrorKind::kSetMismatch,
                  "'" + e.alternative_name + "' uses a different criteria set or normalization");
    }
    ranking.entries.push_back({e.alternative_name, criteria::reweight(e, w).composite, 0, false});
  }
  std::sort(ranking.entries.begin(), ranking.entries.end(),
            [](const RankEntry& a, const RankEntry& b) {
              if (std::abs(a.composite - b.composite) > kTieTolerance) {
                return a.composite > b.composite;
              }
              return a.alternative < b.alternative;
            });
  for (std::size_t k = 0; k < ranking.entries.size(); ++k) {
    auto& e = ranking.entries[k];
    if (k > 0 && std::abs(ranking.entries[k - 1].composite - e.composite) <= kTieTolerance) {
      e.rank = ranking.entries[k - 1].rank;
      e.tied = true;
      ranking.entries[k - 1].tied = true;
    } else {
      e.rank = k + 1;
    }
  }
  return ranking;
}

namespace {

using Order = std::vector<std::string>;

// Shrinks [inside, outside] until narrower than `tolerance`; `changed`
// is false at `inside` and true at `outside`. Returns the midpoint.
double bisect(double inside, double outside, double tolerance,
              const std::function<bool(double)>& changed) {
  while (std::abs(outside - inside) > tolerance) {
    const double mid = 0.5 * (inside + outside);
    if (changed(mid)) {
      outside = mid;
    } else {
      inside = mid;
    }
  }
  return 0.5 * (inside + outside);
}

bool precedes(const Order& order, const std::string& a, const std::string& b) {
  const auto ia = std::find(order.begin(), order.end(), a);
  const auto ib = std::find(order.begin(), order.end(), b);
  return ia < ib;
}

}  // namespace

SensitivityReport analyze(std::span<const criteria::Evaluation> evaluations,
                          const ahp::WeightVector& w, const SweepOptions& options) {
  if (!(options.range > 0.0) || options.steps < 1) {
    throw Error(ErrorKind::kInvalidArgument, "sweep needs range > 0 and steps >= 1");
  }
  SensitivityReport report;
  report.range = options.range;
  report.steps = options.steps;
  if (evaluations.empty()) return report;

  auto order_at = [&](const std::string& criterion, double delta) {
    return rank_alternatives(evaluations, perturb_weights(w, {criterion, delta})).order();
  };
  const Order baseline = rank_alternatives(evaluations, w).order();
  report.baseline = baseline;

  std::vector<double> grid;
  for (int k = 0; k < options.steps; ++k) {
    grid.push_back(options.steps == 1 ? 0.0
                                      : -options.range + 2.0 * options.range * k /
                                                             (options.steps - 1));
  }

  for (std::size_t t = 0; t < w.size(); ++t) {
    const auto& criterion = w.labels[t];
    const double wt = w.weights[t];

    std::vector<double> deltas;
    for (double d : grid) {
      const double clamped = std::clamp(d, -wt, 1.0 - wt);
      if (deltas.empty() || clamped != deltas.back()) deltas.push_back(clamped);
    }
    std::vector<Order> orders;
    for (double d : deltas) {
      orders.push_back(order_at(criterion, d));
      report.rankings.push_back({criterion, d, orders.back()});
    }

    std::optional<double> critical;
    // Walk outward from zero on each side.
    for (int side : {-1, +1}) {
      std::vector<std::size_t> path;
      for (std::size_t k = 0; k < deltas.size(); ++k) {
        if ((side < 0 && deltas[k] < 0.0) || (side > 0 && deltas[k] > 0.0)) path.push_back(k);
      }
      if (side < 0) std::reverse(path.begin(), path.end());

      double prev_delta = 0.0;
      Order prev = baseline;
      bool changed_side = false;
      for (auto k : path) {
        const double d = deltas[k];
        const Order& now = orders[k];
        if (now != prev) {
          for (std::size_t a = 0; a < prev.size(); ++a) {
            for (std::size_t b = a + 1; b < prev.size(); ++b) {
              if (precedes(now, prev[b], prev[a])) {
                const auto& ahead = prev[a];
                const auto& behind = prev[b];
                const double crossing =
                    bisect(prev_delta, d, options.bisection_tolerance, [&](double x) {
                      return precedes(order_at(criterion, x), behind, ahead);
                    });
                report.reversal_events.push_back({criterion, d, crossing, ahead, behind});
              }
            }
          }
        }
        if (!changed_side && now != baseline) {
          changed_side = true;
          const double at = bisect(prev_delta, d, options.bisection_tolerance,
                                   [&](double x) { return order_at(criterion, x) != baseline; });
          if (!critical || std::abs(at) < std::abs(*critical)) critical = at;
        }
        prev = now;
        prev_delta = d;
      }
    }
    report.criticality.push_back({criterion, critical});
  }
  return report;
}

}  // namespace ahpeval::sensitivity
