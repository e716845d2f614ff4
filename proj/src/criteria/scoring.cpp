#include "ahpeval/criteria/scoring.hpp"

#include <set>

#include "ahpeval/error.hpp"

namespace ahpeval::criteria {

std::string_view to_string(Normalization mode) {
  switch (mode) {
    case Normalization::kRaw1To5: return "raw-1-to-5";
    case Normalization::kMinMax0To1: return "min-max-0-to-1";
  }
  return "unknown";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "raw-1-to-5" || text == "raw") return Normalization::kRaw1To5;
  if (text == "min-max-0-to-1" || text == "min-max" || text == "minmax") {
    return Normalization::kMinMax0To1;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown normalization mode '" + std::string(text) + "'");
}

void validate(const RubricScore& score) {
  if (score.value < 1 || score.value > 5) {
    throw ValidationError(ErrorKind::kInvalidScore, score.criterion_id + ".value",
                          "score for " + score.criterion_id + " must be in 1..5, got " +
                              std::to_string(score.value));
  }
  if (score.evidence.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ValidationError(ErrorKind::kInvalidScore, score.criterion_id + ".evidence",
                          "score for " + score.criterion_id + " has no evidence or rationale");
  }
}

double normalize_score(int value, Normalization mode) {
  if (value < 1 || value > 5) {
    throw ValidationError(ErrorKind::kInvalidScore, "value",
                          "rubric score must be in 1..5, got " + std::to_string(value));
  }
  if (mode == Normalization::kMinMax0To1) return (value - 1) / 4.0;
  return static_cast<double>(value);
}

namespace {

void fill_profile(Evaluation& e, const ahp::WeightVector& weights) {
  e.profile.clear();
  e.composite = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const auto& s = e.scores[k];
    ProfileEntry p;
    p.criterion_id = s.criterion_id;
    p.score = s.value;
    p.normalized = normalize_score(s.value, e.normalization);
    p.weight = weights.weights[k];
    p.contribution = p.weight * p.normalized;
    e.composite += p.contribution;
    e.profile.push_back(std::move(p));
  }
}

}  // namespace

Evaluation aggregate(std::string alternative_name, const CriteriaSetRef& set,
                     std::span<const RubricScore> scores, const ahp::WeightVector& weights,
                     Normalization mode) {
  std::vector<const RubricScore*> ordered(weights.size(), nullptr);
  for (const auto& s : scores) {
    const auto k = weights.index_of(s.criterion_id);
    if (k == weights.size()) {
      throw ValidationError(ErrorKind::kScoreCoverage, s.criterion_id,
                            "score for unknown criterion '" + s.criterion_id + "'");
    }
    if (ordered[k] != nullptr) {
      throw ValidationError(ErrorKind::kScoreCoverage, s.criterion_id,
                            "more than one score for criterion '" + s.criterion_id + "'");
    }
    validate(s);
    ordered[k] = &s;
  }
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    if (ordered[k] == nullptr) {
      throw ValidationError(ErrorKind::kScoreCoverage, weights.labels[k],
                            "missing score for criterion '" + weights.labels[k] + "'");
    }
  }

  Evaluation e;
  e.alternative_name = std::move(alternative_name);
  e.criteria_set = set;
  e.normalization = mode;
  for (const auto* s : ordered) e.scores.push_back(*s);
  fill_profile(e, weights);
  return e;
}

Evaluation reweight(const Evaluation& evaluation, const ahp::WeightVector& weights) {
  if (weights.size() != evaluation.scores.size()) {
    throw Error(ErrorKind::kSetMismatch, "weight vector does not match evaluation criteria");
  }
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights.labels[k] != evaluation.scores[k].criterion_id) {
      throw Error(ErrorKind::kSetMismatch,
                  "weight label '" + weights.labels[k] + "' does not match criterion '" +
                      evaluation.scores[k].criterion_id + "'");
    }
  }
  Evaluation out = evaluation;
  fill_profile(out, weights);
  return out;
}

namespace {

std::vector<std::string> labels_of(const Evaluation& e) {
  std::vector<std::string> out;
  for (const auto& s : e.scores) out.push_back(s.criterion_id);
  return out;
}

ChartSeries series_of(const Evaluation& e) {
  ChartSeries s;
  s.name = e.alternative_name;
  for (const auto& score : e.scores) s.values.push_back(score.value);
  return s;
}

}  // namespace

ChartData profile_chart_data(std::span<const Evaluation> evaluations) {
  ChartData chart;
  if (evaluations.empty()) return chart;
  chart.labels = labels_of(evaluations.front());
  for (const auto& e : evaluations) {
    if (e.criteria_set != evaluations.front().criteria_set || labels_of(e) != chart.labels) {
      throw Error(ErrorKind::kSetMismatch, "'" + e.alternative_name +
                                               "' was scored against a different criteria set");
    }
    chart.series.push_back(series_of(e));
  }
  return chart;
}

ChartData profile_chart_data(const Evaluation& a, const Evaluation* b) {
  if (b == nullptr) return profile_chart_data(std::span<const Evaluation>(&a, 1));
  const std::vector<Evaluation> both{a, *b};
  return profile_chart_data(both);
}

}  // namespace ahpeval::criteria
