#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ahpeval/ahp/weights.hpp"
#include "ahpeval/criteria/criteria.hpp"

namespace ahpeval::criteria {

enum class Normalization { kRaw1To5, kMinMax0To1 };

std::string_view to_string(Normalization mode);
Normalization parse_normalization(std::string_view text);

struct RubricScore {
  std::string criterion_id;
  int value = 0;  // 1..5
  std::string evidence;
  std::vector<std::string> evidence_refs;

  friend bool operator==(const RubricScore&, const RubricScore&) = default;
};

// Throws ValidationError(kInvalidScore) for value outside 1..5 or empty evidence.
void validate(const RubricScore& score);

// raw: value unchanged; min-max: (value - 1) / 4.
double normalize_score(int value, Normalization mode);

struct ProfileEntry {
  std::string criterion_id;
  int score = 0;
  double normalized = 0.0;
  double weight = 0.0;
  double contribution = 0.0;  // weight * normalized

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

struct Evaluation {
  std::string alternative_name;
  CriteriaSetRef criteria_set;
  std::vector<RubricScore> scores;  // weight-vector order
  Normalization normalization = Normalization::kRaw1To5;
  double composite = 0.0;
  std::vector<ProfileEntry> profile;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

// Weighted sum of (normalized) rubric scores. Scores may arrive in any
// order but must cover the weight vector's labels exactly once.
Evaluation aggregate(std::string alternative_name, const CriteriaSetRef& set,
                     std::span<const RubricScore> scores, const ahp::WeightVector& weights,
                     Normalization mode = Normalization::kRaw1To5);

// Recomputes composite and profile under different weights.
Evaluation reweight(const Evaluation& evaluation, const ahp::WeightVector& weights);

struct ChartSeries {
  std::string name;
  std::vector<double> values;  // raw 1..5
  friend bool operator==(const ChartSeries&, const ChartSeries&) = default;
};

struct ChartData {
  std::vector<std::string> labels;
  std::vector<ChartSeries> series;
  double radial_min = 1.0;
  double radial_max = 5.0;
  friend bool operator==(const ChartData&, const ChartData&) = default;
};

// Radar/spider series in criteria order. Throws kSetMismatch when the
// evaluations reference different sets.
ChartData profile_chart_data(const Evaluation& a, const Evaluation* b = nullptr);
ChartData profile_chart_data(std::span<const Evaluation> evaluations);

}  // namespace ahpeval::criteria
