#pragma once

#include <random>
#include <string>

#include "ahpeval/storage/project.hpp"
#include "ahpeval/storage/workflow.hpp"
#include "support/generators.hpp"

namespace gen {

inline std::string text(std::mt19937_64& rng, std::size_t max_len = 24) {
  static const std::vector<std::string> pieces = {
      "a", "Z", "7", " ", "\"", "\\", "/", "\n", "\t", "é", "Ω", "→", "{", "]", ",", "\x01", "😀", "1/9"};
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::string out;
  for (std::size_t k = len(rng); k > 0; --k) out += pieces[pick(rng)];
  return out;
}

inline double real(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1e3, 1e3);
  return d(rng);
}

inline ahpeval::criteria::CriteriaSet criteria_set(std::mt19937_64& rng, std::size_t n) {
  ahpeval::criteria::CriteriaSet set;
  set.name = "set-" + text(rng, 6);
  set.version = std::to_string(rng() % 100);
  set.provenance = text(rng);
  for (std::size_t k = 0; k < n; ++k) {
    ahpeval::criteria::Criterion c;
    c.id = "K" + std::to_string(k + 1) + (rng() % 2 ? "x" : "");
    c.name = text(rng);
    c.description = text(rng, 60);
    c.ci_applicability = text(rng);
    for (std::size_t i = rng() % 3; i > 0; --i) c.indicators.push_back(text(rng));
    c.anchors = {{1, text(rng)}, {3, text(rng)}, {5, text(rng)}};
    set.criteria.push_back(std::move(c));
  }
  return set;
}

inline ahpeval::panel::JudgmentSet judgment_set(std::mt19937_64& rng,
                                                const ahpeval::criteria::CriteriaSet& set) {
  ahpeval::panel::JudgmentSet js;
  js.source = rng() % 2 ? "consensus" : text(rng, 5);
  js.metadata = {text(rng, 8), text(rng, 8), text(rng, 8)};
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      js.judgments.push_back({set.criteria[i].id, set.criteria[j].id, saaty(rng), text(rng)});
    }
  }
  return js;
}

// Valid project exercising every field, built through the workflow API.
inline ahpeval::storage::Project random_project(std::mt19937_64& rng) {
  using namespace ahpeval;
  const std::size_t n = 2 + rng() % 9;
  auto p = storage::new_project(text(rng), criteria_set(rng, n), text(rng, 10));
  p.metadata.modified = text(rng, 10);
  for (std::size_t k = rng() % 3; k > 0; --k) p.metadata.notes.push_back(text(rng));

  const auto ids = p.criteria_set.ids();
  for (std::size_t k = rng() % 4; k > 0; --k) {
    if (rng() % 2) {
      auto m = random_saaty_matrix(rng, n);
      std::vector<ahp::UpperJudgment> upper;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          upper.push_back({{i, j}, ahp::SaatyJudgment::from_ratio(m.at(i, j))});
        }
      }
      storage::add_matrix(p, ahp::build_matrix(n, upper, ids),
                          rng() % 2 ? storage::MatrixOrigin::kManual : storage::MatrixOrigin::kPanel);
    } else if (rng() % 2) {
      storage::add_matrix(p, ahp::PairwiseMatrix::consistent(random_priorities(rng, n), ids),
                          storage::MatrixOrigin::kManual);
    } else {
      auto m = random_rational_matrix(rng, n, 1'000'000'007);
      storage::add_matrix(p, ahp::PairwiseMatrix::from_upper(ids, m.upper(), false),
                          storage::MatrixOrigin::kManual);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() % 3 == 0) continue;
      if (rng() % 2) {
        storage::put_judgment(p, ids[i], ids[j], saaty(rng), text(rng));
      } else {
        storage::put_judgment(p, ids[j], ids[i], saaty(rng));
      }
    }
  }

  if (!p.matrices.empty() && rng() % 4 != 0) {
    const auto idx = rng() % p.matrices.size();
    const auto method = rng() % 2 ? ahp::WeightingMethod::kPrincipalEigenvector
                                  : ahp::WeightingMethod::kGeometricMeanRows;
    storage::activate_weights(p, idx, method, true, text(rng, 5));
  }

  for (std::size_t a = rng() % 4; a > 0; --a) {
    std::vector<criteria::RubricScore> scores;
    for (const auto& id : ids) {
      criteria::RubricScore s{id, static_cast<int>(1 + rng() % 5), "e" + text(rng), {}};
      for (std::size_t r = rng() % 3; r > 0; --r) s.evidence_refs.push_back(text(rng));
      scores.push_back(std::move(s));
    }
    storage::put_scores(p, "alt-" + std::to_string(a) + text(rng, 4), std::move(scores));
  }
  if (p.active_weights && !p.score_sheets.empty()) {
    storage::aggregate_all(p, rng() % 2 ? criteria::Normalization::kRaw1To5
                                        : criteria::Normalization::kMinMax0To1);
    if (rng() % 2) storage::run_sensitivity(p, {0.05 + (rng() % 10) / 100.0, 1 + static_cast<int>(rng() % 7)});
  }

  for (std::size_t r = rng() % 3; r > 0; --r) {
    storage::PanelRun run;
    run.model = text(rng, 8);
    run.accepted = rng() % 2;
    run.rounds = 1 + static_cast<int>(rng() % 3);
    run.best_round = 1;
    run.judgments = judgment_set(rng, p.criteria_set);
    for (int e = 0; e < run.rounds; ++e) {
      panel::TranscriptEntry t;
      t.round = e + 1;
      t.kind = e == 0 ? "panel" : "refinement";
      t.prompt = text(rng, 80);
      t.raw_response = text(rng, 80);
      t.response_digest = text(rng, 8);
      if (rng() % 2) t.judgments = judgment_set(rng, p.criteria_set);
      if (rng() % 2) t.report = ahp::consistency(random_saaty_matrix(rng, n));
      run.entries.push_back(std::move(t));
    }
    p.transcripts.push_back(std::move(run));
  }
  if (rng() % 2) p.session = storage::SessionRecord{text(rng, 8), "comparing", rng() % 1000};
  return p;
}

}  // namespace gen
