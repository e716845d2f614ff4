#include "ahpeval/reference_case.hpp"

#include <cmath>

#include <fmt/format.h>

#include "ahpeval/sensitivity/sensitivity.hpp"

namespace ahpeval::reference {

namespace {

// Row-major strict upper triangle of the consensus matrix.
constexpr const char* kUpper[] = {
    "2", "7",   "5",   "7",   "7",   "7",   "5",   "9",   "7",    // C1
    "7", "5",   "7",   "7",   "7",   "3",   "9",   "7",           // C2
    "1/3", "1/3", "2",  "3",   "1/3", "3",   "3",                   // C3
    "2",   "3",   "3",  "1/3", "5",   "3",                          // C4
    "3",   "3",   "1/3", "5",  "3",                                 // C5
    "3",   "1/5", "3",  "3",                                        // C6
    "1/5", "3",   "2",                                              // C7
    "7",   "5",                                                     // C8
    "1/3",                                                          // C9
};

std::vector<criteria::RubricScore> make_scores(const int (&values)[10], const char* source) {
  std::vector<criteria::RubricScore> out;
  for (int k = 0; k < 10; ++k) {
    out.push_back({"C" + std::to_string(k + 1), values[k],
                   fmt::format("{} reference assessment, rubric level {}", source, values[k]),
                   {source}});
  }
  return out;
}

}  // namespace

std::vector<ahp::UpperJudgment> consensus_judgments() {
  std::vector<ahp::UpperJudgment> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = i + 1; j < 10; ++j) {
      out.push_back({{i, j}, ahp::SaatyJudgment::parse(kUpper[k++])});
    }
  }
  return out;
}

ahp::PairwiseMatrix consensus_matrix() { return ahp::build_matrix(10, consensus_judgments()); }

ahp::WeightVector published_weights() {
  return {{0.317, 0.254, 0.046, 0.079, 0.066, 0.039, 0.028, 0.130, 0.016, 0.025},
          ahp::PairwiseMatrix::default_labels(10),
          ahp::WeightingMethod::kPrincipalEigenvector};
}

std::vector<criteria::RubricScore> powercyber_scores() {
  return make_scores({5, 3, 2, 2, 1, 3, 5, 1, 1, 1}, "PowerCyber");
}

std::vector<criteria::RubricScore> enigma_scores() {
  return make_scores({3, 1, 3, 4, 2, 3, 5, 4, 2, 2}, "ENIGMA");
}

std::vector<CheckResult> run_reference_checks() {
  std::vector<CheckResult> out;
  auto check = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  const auto m = consensus_matrix();
  const auto w = ahp::derive_weights(m);
  const auto published = published_weights();
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double diff = std::abs(w.weights[k] - published.weights[k]);
    check(fmt::format("weight {}", w.labels[k]), diff <= kWeightTolerance,
          fmt::format("{:.4f} vs {:.3f} (+-{})", w.weights[k], published.weights[k],
                      kWeightTolerance));
  }
  check("weights sum to 1", std::abs(w.sum() - 1.0) <= 1e-9, fmt::format("{:.15f}", w.sum()));

  const auto report = ahp::consistency(m);
  check("lambda_max", std::abs(report.lambda_max - kLambdaMax) <= kLambdaTolerance,
        fmt::format("{:.4f} vs {} (+-{})", report.lambda_max, kLambdaMax, kLambdaTolerance));
  check("consistency index", std::abs(report.coi - kConsistencyIndex) <= kCoiTolerance,
        fmt::format("{:.4f} vs {} (+-{})", report.coi, kConsistencyIndex, kCoiTolerance));
  check("random index n=10", report.roi == 1.49, fmt::format("{}", report.roi));
  const double cor = report.cor.value_or(-1.0);
  check("consistency ratio", std::abs(cor - kConsistencyRatio) <= kCorTolerance,
        fmt::format("{:.4f} vs {} (+-{})", cor, kConsistencyRatio, kCorTolerance));
  check("consistency gate", report.acceptable, report.acceptable ? "acceptable" : "rejected");

  const auto set = criteria::builtin_ci_criteria().ref();
  const auto enigma = criteria::aggregate("ENIGMA", set, enigma_scores(), published);
  const auto power = criteria::aggregate("PowerCyber", set, powercyber_scores(), published);
  check("ENIGMA composite", std::abs(enigma.composite - kEnigmaComposite) <= kCompositeTolerance,
        fmt::format("{:.4f} vs {} (+-{})", enigma.composite, kEnigmaComposite,
                    kCompositeTolerance));
  check("PowerCyber composite",
        std::abs(power.composite - kPowerCyberComposite) <= kCompositeTolerance,
        fmt::format("{:.4f} vs {} (+-{})", power.composite, kPowerCyberComposite,
                    kCompositeTolerance));
  check("PowerCyber printed figure not reproducible",
        std::abs(power.composite - kPowerCyberPrinted) > kCompositeTolerance,
        fmt::format("documented discrepancy: published scores and weights give {:.3f}, "
                    "printed figure is {}",
                    power.composite, kPowerCyberPrinted));

  const std::vector<criteria::Evaluation> evals{power, enigma};
  const auto ranking = sensitivity::rank_alternatives(evals, published);
  const bool order_ok = ranking.entries.size() == 2 &&
                        ranking.entries[0].alternative == "PowerCyber" &&
                        ranking.entries[1].alternative == "ENIGMA" && !ranking.entries[0].tied;
  check("ranking PowerCyber > ENIGMA", order_ok,
        fmt::format("{} > {}", ranking.entries[0].alternative, ranking.entries[1].alternative));
  return out;
}

}  // namespace ahpeval::reference
