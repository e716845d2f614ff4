#include <random>

#include "doctest.h"

#include "ahpeval/criteria/criteria.hpp"
#include "ahpeval/criteria/scoring.hpp"
#include "ahpeval/reference_case.hpp"
#include "support/oracles.hpp"

using namespace ahpeval;
using namespace ahpeval::criteria;

namespace {

std::vector<RubricScore> scores_of(const std::vector<int>& values) {
  std::vector<RubricScore> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    out.push_back({"C" + std::to_string(k + 1), values[k], "observed", {}});
  }
  return out;
}

std::vector<double> as_double(const std::vector<int>& v) { return {v.begin(), v.end()}; }

ahp::WeightVector random_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  ahp::WeightVector w;
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    w.weights.push_back(u(rng));
    total += w.weights.back();
    w.labels.push_back("C" + std::to_string(k + 1));
  }
  for (auto& x : w.weights) x /= total;
  return w;
}

}  // namespace

TEST_CASE("builtin criteria set") {
  const auto set = builtin_ci_criteria();
  CHECK_NOTHROW(validate(set));
  REQUIRE(set.size() == 10);
  CHECK(set.ids() == std::vector<std::string>{"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8",
                                              "C9", "C10"});
  CHECK(set.criteria[0].name == "Realism & Fidelity");
  const auto& top = set.criteria[0].anchors.at(5);
  CHECK(top.find("physics") != std::string::npos);
  CHECK(top.find("HIL") != std::string::npos);
  CHECK(set.criteria[8].name == "Cost & Resource Efficiency");
  for (const auto& c : set.criteria) {
    CHECK(c.anchors.size() == 3);
    CHECK_FALSE(c.indicators.empty());
  }
}

TEST_CASE("criteria set validation") {
  auto set = builtin_ci_criteria();
  SUBCASE("duplicate ids") {
    set.criteria[1].id = "C1";
    CHECK_THROWS_AS(validate(set), ValidationError);
  }
  SUBCASE("missing anchor") {
    set.criteria[2].anchors.erase(3);
    try {
      validate(set);
      FAIL("expected validation error");
    } catch (const ValidationError& e) {
      CHECK(e.field() == "criteria[2].anchors");
    }
  }
  SUBCASE("too few criteria") {
    set.criteria.resize(1);
    CHECK_THROWS_AS(validate(set), ValidationError);
  }
}

TEST_CASE("normalize_score") {
  CHECK(normalize_score(1, Normalization::kMinMax0To1) == 0.0);
  CHECK(normalize_score(5, Normalization::kMinMax0To1) == 1.0);
  CHECK(normalize_score(3, Normalization::kMinMax0To1) == 0.5);
  CHECK(normalize_score(4, Normalization::kRaw1To5) == 4.0);
  try {
    normalize_score(6, Normalization::kRaw1To5);
    FAIL("expected invalid score");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidScore);
  }
  CHECK_THROWS_AS(normalize_score(0, Normalization::kMinMax0To1), Error);
}

TEST_CASE("aggregate reproduces the reference composites") {
  const auto w = reference::published_weights();
  const auto set = builtin_ci_criteria().ref();
  const auto enigma = aggregate("ENIGMA", set, reference::enigma_scores(), w);
  const auto power = aggregate("PowerCyber", set, reference::powercyber_scores(), w);
  CHECK(std::abs(enigma.composite - 2.65) <= 0.005);
  CHECK(std::abs(power.composite - 3.091) <= 0.005);
  CHECK(enigma.composite ==
        doctest::Approx(oracle::dot(w.weights, as_double({3, 1, 3, 4, 2, 3, 5, 4, 2, 2}))).epsilon(1e-12));
  CHECK(power.composite ==
        doctest::Approx(oracle::dot(w.weights, as_double({5, 3, 2, 2, 1, 3, 5, 1, 1, 1}))).epsilon(1e-12));
  CHECK(std::abs(power.composite - 3.28) > 0.005);
  double total = 0.0;
  for (const auto& p : power.profile) total += p.contribution;
  CHECK(std::abs(total - power.composite) <= 1e-9);
}

TEST_CASE("aggregate accepts scores in any order and stores them in weight order") {
  const auto w = reference::published_weights();
  auto scores = reference::enigma_scores();
  std::reverse(scores.begin(), scores.end());
  const auto e = aggregate("x", {"s", "1"}, scores, w);
  CHECK(e.scores.front().criterion_id == "C1");
  CHECK(e.profile.back().criterion_id == "C10");
}

TEST_CASE("aggregate coverage errors") {
  const auto w = reference::published_weights();
  auto scores = reference::enigma_scores();
  SUBCASE("missing") {
    scores.erase(scores.begin() + 4);
    try {
      aggregate("x", {"s", "1"}, scores, w);
      FAIL("expected coverage error");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ErrorKind::kScoreCoverage);
      CHECK(e.field() == "C5");
    }
  }
  SUBCASE("extra") {
    scores.push_back({"C11", 3, "x", {}});
    CHECK_THROWS_AS(aggregate("x", {"s", "1"}, scores, w), ValidationError);
  }
  SUBCASE("duplicate") {
    scores[1].criterion_id = "C1";
    CHECK_THROWS_AS(aggregate("x", {"s", "1"}, scores, w), ValidationError);
  }
  SUBCASE("empty evidence") {
    scores[0].evidence = "  ";
    try {
      aggregate("x", {"s", "1"}, scores, w);
      FAIL("expected invalid score");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kInvalidScore);
    }
  }
}

TEST_CASE("property: constant scores, dominance and additivity") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> score(1, 5);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k) % 11;
    const auto w = random_weights(rng, n);
    const int c = score(rng);
    const auto uniform = scores_of(std::vector<int>(n, c));
    CHECK(std::abs(aggregate("u", {"s", "1"}, uniform, w).composite - c) <= 1e-12);
    CHECK(std::abs(aggregate("u", {"s", "1"}, uniform, w, Normalization::kMinMax0To1).composite -
                   (c - 1) / 4.0) <= 1e-12);

    std::vector<int> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = score(rng);
      a[i] = std::min(5, b[i] + (score(rng) > 3 ? 1 : 0));
    }
    const std::size_t lift = static_cast<std::size_t>(k) % n;
    if (b[lift] == 5) b[lift] = 4;
    a[lift] = std::max(a[lift], b[lift] + 1);
    const auto ea = aggregate("a", {"s", "1"}, scores_of(a), w);
    const auto eb = aggregate("b", {"s", "1"}, scores_of(b), w);
    CHECK(ea.composite > eb.composite);

    // Composite of a plus composite of b equals the pairwise-summed contributions.
    double pairwise = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      pairwise += ea.profile[i].contribution + eb.profile[i].contribution;
    }
    CHECK(std::abs(ea.composite + eb.composite - pairwise) <= 1e-9);
  }
}

TEST_CASE("profile chart data") {
  const auto w = reference::published_weights();
  const auto set = builtin_ci_criteria().ref();
  const auto power = aggregate("PowerCyber", set, reference::powercyber_scores(), w);
  const auto enigma = aggregate("ENIGMA", set, reference::enigma_scores(), w);
  const auto chart = profile_chart_data(power, &enigma);
  CHECK(chart.labels.size() == 10);
  CHECK(chart.labels.front() == "C1");
  REQUIRE(chart.series.size() == 2);
  CHECK(chart.series[0].values == std::vector<double>{5, 3, 2, 2, 1, 3, 5, 1, 1, 1});
  CHECK(chart.series[1].values == std::vector<double>{3, 1, 3, 4, 2, 3, 5, 4, 2, 2});
  CHECK(chart.radial_min == 1.0);
  CHECK(chart.radial_max == 5.0);
  CHECK(profile_chart_data(power).series.size() == 1);

  auto other = enigma;
  other.criteria_set.version = "2.0";
  try {
    profile_chart_data(power, &other);
    FAIL("expected set mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSetMismatch);
  }
}
