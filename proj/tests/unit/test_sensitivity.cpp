#include <cmath>
#include <random>

#include "doctest.h"

#include "ahpeval/reference_case.hpp"
#include "ahpeval/sensitivity/sensitivity.hpp"
#include "support/oracles.hpp"

using namespace ahpeval;
using namespace ahpeval::sensitivity;

namespace {

std::vector<criteria::Evaluation> reference_pair() {
  const auto w = reference::published_weights();
  const auto set = criteria::builtin_ci_criteria().ref();
  return {criteria::aggregate("PowerCyber", set, reference::powercyber_scores(), w),
          criteria::aggregate("ENIGMA", set, reference::enigma_scores(), w)};
}

std::vector<double> score_gap() {
  const std::vector<double> p{5, 3, 2, 2, 1, 3, 5, 1, 1, 1};
  const std::vector<double> e{3, 1, 3, 4, 2, 3, 5, 4, 2, 2};
  std::vector<double> d;
  for (std::size_t k = 0; k < p.size(); ++k) d.push_back(p[k] - e[k]);
  return d;
}

}  // namespace

TEST_CASE("perturb_weights") {
  const auto w = reference::published_weights();
  SUBCASE("zero delta is the identity") {
    const auto out = perturb_weights(w, {"C3", 0.0});
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(out.weights[k] == doctest::Approx(w.weights[k]).epsilon(1e-15));
  }
  SUBCASE("removing C1 entirely") {
    const auto out = perturb_weights(w, {"C1", -0.317});
    CHECK(out.weights[0] == 0.0);
    for (std::size_t k = 1; k < w.size(); ++k) {
      CHECK(std::abs(out.weights[k] - w.weights[k] / (1.0 - 0.317)) <= 1e-12);
    }
    CHECK(std::abs(out.sum() - 1.0) <= 1e-9);
  }
  SUBCASE("two criteria") {
    const ahp::WeightVector two{{0.6, 0.4}, {"A", "B"}, ahp::WeightingMethod::kPrincipalEigenvector};
    const auto out = perturb_weights(two, {"A", 0.2});
    CHECK(out.weights[0] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(out.weights[1] == doctest::Approx(0.2).epsilon(1e-12));
  }
  SUBCASE("target carrying all mass") {
    const ahp::WeightVector all{{1.0, 0.0, 0.0}, {"A", "B", "C"}, ahp::WeightingMethod::kPrincipalEigenvector};
    const auto out = perturb_weights(all, {"A", -0.4});
    CHECK(out.weights[1] == doctest::Approx(0.2));
    CHECK(out.weights[2] == doctest::Approx(0.2));
  }
  SUBCASE("out of range") {
    try {
      perturb_weights(w, {"C1", -0.5});
      FAIL("expected out-of-range");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kOutOfRangePerturbation);
    }
    CHECK_THROWS_AS(perturb_weights(w, {"C1", 0.7}), Error);
    CHECK_THROWS_AS(perturb_weights(w, {"C42", 0.1}), Error);
  }
}

TEST_CASE("property: perturbed vectors stay on the simplex") {
  std::mt19937_64 rng(8);
  const auto w = reference::published_weights();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t t = static_cast<std::size_t>(k) % w.size();
    const double delta = -w.weights[t] + u(rng) * 1.0;
    const auto out = perturb_weights(w, {w.labels[t], delta});
    CHECK(std::abs(out.sum() - 1.0) <= 1e-9);
    for (double x : out.weights) CHECK(x >= 0.0);
  }
}

TEST_CASE("rank_alternatives") {
  const auto evals = reference_pair();
  const auto w = reference::published_weights();
  const auto r = rank_alternatives(evals, w);
  CHECK(r.order() == std::vector<std::string>{"PowerCyber", "ENIGMA"});
  CHECK_FALSE(r.has_ties());
  CHECK(r.entries[0].rank == 1);
  CHECK(r.entries[1].rank == 2);

  CHECK(rank_alternatives(std::span(evals.data(), 1), w).entries.size() == 1);

  auto twin = evals[0];
  twin.alternative_name = "Alpha";
  const std::vector<criteria::Evaluation> tied{evals[0], twin};
  const auto rt = rank_alternatives(tied, w);
  CHECK(rt.has_ties());
  CHECK(rt.order() == std::vector<std::string>{"Alpha", "PowerCyber"});
  CHECK(rt.entries[0].rank == rt.entries[1].rank);

  auto other = evals[1];
  other.criteria_set.name = "elsewhere";
  const std::vector<criteria::Evaluation> mixed{evals[0], other};
  CHECK_THROWS_AS(rank_alternatives(mixed, w), Error);
}

TEST_CASE("analyze finds the C8 reversal at the affine crossing") {
  const auto evals = reference_pair();
  const auto w = reference::published_weights();
  const auto report = analyze(evals, w);
  CHECK(report.baseline == std::vector<std::string>{"PowerCyber", "ENIGMA"});

  const auto gap = score_gap();
  for (std::size_t t = 0; t < w.size(); ++t) {
    const double expected = oracle::affine_crossing(w.weights, gap, t);
    const bool in_range = std::isfinite(expected) && std::abs(expected) <= 0.15 &&
                          w.weights[t] + expected >= 0.0;
    const auto& crit = report.criticality[t];
    CHECK(crit.criterion == w.labels[t]);
    if (in_range) {
      REQUIRE(crit.delta.has_value());
      CHECK(std::abs(*crit.delta - expected) <= 1e-4);
    } else {
      CHECK_FALSE(crit.delta.has_value());
    }
  }
  REQUIRE(report.criticality[7].delta.has_value());
  CHECK(*report.criticality[7].delta > 0.0);
  CHECK(*report.criticality[7].delta == doctest::Approx(0.1115).epsilon(1e-3));

  REQUIRE(report.reversal_events.size() == 1);
  const auto& ev = report.reversal_events[0];
  CHECK(ev.criterion == "C8");
  CHECK(ev.ahead == "PowerCyber");
  CHECK(ev.behind == "ENIGMA");
  CHECK(std::abs(ev.crossing - oracle::affine_crossing(w.weights, gap, 7)) <= 1e-4);

  // Criticality soundness at +- 1e-3.
  const double c = *report.criticality[7].delta;
  const auto before = rank_alternatives(evals, perturb_weights(w, {"C8", c - 1e-3})).order();
  const auto after = rank_alternatives(evals, perturb_weights(w, {"C8", c + 1e-3})).order();
  CHECK(before == report.baseline);
  CHECK(after != report.baseline);
}

TEST_CASE("analyze records consistent rankings") {
  const auto evals = reference_pair();
  const auto w = reference::published_weights();
  const auto report = analyze(evals, w, {0.15, 61, 1e-7});
  // Per criterion: strictly increasing deltas clamped to feasibility.
  for (std::size_t t = 0; t < w.size(); ++t) {
    std::vector<double> deltas;
    for (const auto& r : report.rankings) {
      if (r.criterion == w.labels[t]) deltas.push_back(r.delta);
    }
    REQUIRE_FALSE(deltas.empty());
    CHECK(deltas.size() <= 61);
    CHECK(deltas.front() == doctest::Approx(std::max(-0.15, -w.weights[t])));
    CHECK(deltas.back() == doctest::Approx(0.15));
    for (std::size_t k = 1; k < deltas.size(); ++k) CHECK(deltas[k] > deltas[k - 1]);
  }
  for (const auto& r : report.rankings) {
    if (r.delta == 0.0) CHECK(r.order == report.baseline);
    if (r.criterion == "C8" && r.delta > report.criticality[7].delta.value()) {
      CHECK(r.order != report.baseline);
    }
  }
}

TEST_CASE("composites are affine in delta under the proportional rule") {
  const auto evals = reference_pair();
  const auto w = reference::published_weights();
  for (std::size_t t = 0; t < w.size(); ++t) {
    auto composite = [&](double d) {
      return criteria::reweight(evals[0], perturb_weights(w, {w.labels[t], d})).composite;
    };
    const double a = composite(-0.01), b = composite(0.0), c = composite(0.01);
    CHECK(std::abs((a + c) / 2.0 - b) <= 1e-12);
  }
}

TEST_CASE("degenerate sweeps") {
  const auto evals = reference_pair();
  const auto w = reference::published_weights();
  const auto flat = analyze(evals, w, {0.15, 1, 1e-7});
  CHECK(flat.reversal_events.empty());
  for (const auto& r : flat.rankings) CHECK(r.order == flat.baseline);
  for (const auto& c : flat.criticality) CHECK_FALSE(c.delta.has_value());

  const auto single = analyze(std::span(evals.data(), 1), w);
  CHECK(single.reversal_events.empty());

  CHECK_THROWS_AS(analyze(evals, w, {0.0, 61, 1e-7}), Error);
}
