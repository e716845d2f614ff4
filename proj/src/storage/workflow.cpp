#include "ahpeval/storage/workflow.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "ahpeval/panel/panel.hpp"

namespace ahpeval::storage {

namespace {

std::size_t criterion_index(const Project& p, std::string_view id) {
  const auto k = p.criteria_set.index_of(id);
  if (!k) {
    throw ValidationError(ErrorKind::kNotFound, std::string(id),
                          "unknown criterion '" + std::string(id) + "'");
  }
  return *k;
}

}  // namespace

DraftStatus draft_status(const Project& p, double threshold) {
  const auto n = p.criteria_set.size();
  DraftStatus status;
  status.required = n * (n - 1) / 2;
  status.entered = p.draft_judgments.size();
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairIndex pair{i, j};
      if (k < p.draft_judgments.size() && p.draft_judgments[k].pair == pair) {
        ++k;
      } else {
        status.missing.push_back(pair);
      }
    }
  }
  if (status.missing.empty() && n >= 2) {
    status.report = ahp::consistency(draft_matrix(p), ahp::RandomIndexTable::saaty(), threshold);
  }
  return status;
}

DraftStatus put_judgment(Project& p, std::string_view first, std::string_view second,
                         const ahp::SaatyJudgment& value, std::string rationale, double threshold) {
  const auto a = criterion_index(p, first);
  const auto b = criterion_index(p, second);
  if (a == b) {
    throw ValidationError(ErrorKind::kInvalidJudgment, std::string(first),
                          "a criterion cannot be compared with itself");
  }
  DraftJudgment d{{std::min(a, b), std::max(a, b)}, a < b ? value : value.reciprocal(),
                  std::move(rationale)};
  auto& drafts = p.draft_judgments;
  const auto it = std::lower_bound(drafts.begin(), drafts.end(), d.pair,
                                   [](const DraftJudgment& x, const PairIndex& y) { return x.pair < y; });
  if (it != drafts.end() && it->pair == d.pair) {
    *it = std::move(d);
  } else {
    drafts.insert(it, std::move(d));
  }
  return draft_status(p, threshold);
}

ahp::PairwiseMatrix draft_matrix(const Project& p) {
  std::vector<ahp::UpperJudgment> upper;
  upper.reserve(p.draft_judgments.size());
  for (const auto& d : p.draft_judgments) upper.push_back({d.pair, d.value});
  try {
    return ahp::build_matrix(p.criteria_set.size(), upper, p.criteria_set.ids());
  } catch (const IncompleteMatrixError& e) {
    std::string names;
    for (const auto& m : e.missing()) {
      if (!names.empty()) names += ", ";
      names += "(" + p.criteria_set.criteria[m.i].id + ", " + p.criteria_set.criteria[m.j].id + ")";
    }
    throw IncompleteMatrixError(e.missing(), fmt::format("{} of {} judgments missing: {}", e.missing().size(),
                                                         upper.size() + e.missing().size(), names));
  }
}

std::size_t add_matrix(Project& p, const ahp::PairwiseMatrix& m, MatrixOrigin origin, double threshold) {
  if (m.labels() != p.criteria_set.ids()) {
    throw Error(ErrorKind::kSetMismatch, "matrix labels do not match the project's criteria set");
  }
  p.matrices.push_back({m, ahp::consistency(m, ahp::RandomIndexTable::saaty(), threshold), origin});
  return p.matrices.size() - 1;
}

const ActiveWeights& activate_weights(Project& p, std::size_t matrix_index, ahp::WeightingMethod method,
                                      bool allow_unverified, const std::string& now) {
  if (matrix_index >= p.matrices.size()) {
    throw Error(ErrorKind::kNotFound, fmt::format("no matrix #{}", matrix_index));
  }
  const auto& stored = p.matrices[matrix_index];
  const bool acceptable = stored.report.acceptable;
  if (!acceptable && !allow_unverified) {
    throw Error(ErrorKind::kConsistencyGate,
                fmt::format("CoR {:.4f} exceeds the threshold {:.2f}; revise the flagged judgments "
                            "or override explicitly",
                            stored.report.cor.value_or(stored.report.coi), stored.report.threshold));
  }
  ActiveWeights a;
  a.weights = ahp::derive_weights(stored.matrix, method);
  a.matrix_index = matrix_index;
  a.override_unverified = !acceptable;
  if (!acceptable) {
    p.metadata.notes.push_back(fmt::format("{}: weights from matrix #{} activated without passing the "
                                           "consistency gate (override-unverified)",
                                           now, matrix_index));
  }
  p.active_weights = std::move(a);
  // Stored composites were computed with the previous weights.
  p.evaluations.clear();
  return *p.active_weights;
}

void put_scores(Project& p, const std::string& alternative, std::vector<criteria::RubricScore> scores) {
  if (alternative.empty()) {
    throw ValidationError(ErrorKind::kInvalidArgument, "alternative", "alternative name is empty");
  }
  for (std::size_t k = 0; k < scores.size(); ++k) {
    criterion_index(p, scores[k].criterion_id);
    try {
      criteria::validate(scores[k]);
    } catch (const ValidationError& e) {
      throw ValidationError(e.kind(), fmt::format("scores[{}].{}", k, e.field()), e.what());
    }
  }
  for (auto& sheet : p.score_sheets) {
    if (sheet.alternative == alternative) {
      sheet.scores = std::move(scores);
      return;
    }
  }
  p.score_sheets.push_back({alternative, std::move(scores)});
}

const std::vector<criteria::Evaluation>& aggregate_all(Project& p, criteria::Normalization mode) {
  if (!p.active_weights) throw Error(ErrorKind::kIncompleteProject, "no active weights; derive weights first");
  if (p.score_sheets.empty()) throw Error(ErrorKind::kIncompleteProject, "no rubric scores have been entered");
  std::vector<criteria::Evaluation> out;
  for (const auto& sheet : p.score_sheets) {
    try {
      out.push_back(criteria::aggregate(sheet.alternative, p.criteria_set.ref(), sheet.scores,
                                        p.active_weights->weights, mode));
    } catch (Error& e) {
      e.add_context("alternative '" + sheet.alternative + "'");
      throw;
    }
  }
  p.evaluations = std::move(out);
  return p.evaluations;
}

const sensitivity::SensitivityReport& run_sensitivity(Project& p, const sensitivity::SweepOptions& options) {
  if (!p.active_weights) throw Error(ErrorKind::kIncompleteProject, "no active weights; derive weights first");
  if (p.evaluations.empty()) throw Error(ErrorKind::kIncompleteProject, "no evaluations; aggregate first");
  p.sensitivity_reports.push_back(sensitivity::analyze(p.evaluations, p.active_weights->weights, options));
  return p.sensitivity_reports.back();
}

std::size_t record_panel_run(Project& p, const panel::ElicitationResult& result, const std::string& model) {
  p.transcripts.push_back(
      {model, result.accepted, result.rounds, result.best_round, result.judgments, result.transcript});
  return p.transcripts.size() - 1;
}

std::size_t accept_panel_run(Project& p, std::size_t run_index, double threshold) {
  if (run_index >= p.transcripts.size()) {
    throw Error(ErrorKind::kNotFound, fmt::format("no panel run #{}", run_index));
  }
  const auto& run = p.transcripts[run_index];
  const auto matrix = panel::to_matrix(run.judgments, p.criteria_set);
  std::vector<DraftJudgment> drafts;
  for (const auto& j : run.judgments.judgments) {
    const auto a = criterion_index(p, j.first);
    const auto b = criterion_index(p, j.second);
    drafts.push_back({{std::min(a, b), std::max(a, b)}, a < b ? j.value : j.value.reciprocal(), j.rationale});
  }
  std::sort(drafts.begin(), drafts.end(),
            [](const DraftJudgment& x, const DraftJudgment& y) { return x.pair < y.pair; });
  p.draft_judgments = std::move(drafts);
  return add_matrix(p, matrix, MatrixOrigin::kPanel, threshold);
}

}  // namespace ahpeval::storage
