#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ahpeval/storage/project.hpp"

// Pipeline steps on a Project, shared by the command line and the service.
namespace ahpeval::storage {

struct DraftStatus {
  std::size_t entered = 0;
  std::size_t required = 0;
  std::vector<PairIndex> missing;
  // Present once the draft is complete.
  std::optional<ahp::ConsistencyReport> report;
};

DraftStatus draft_status(const Project& p, double threshold = ahp::kDefaultConsistencyThreshold);

// Stores the judgment "first over second"; reversed ids store the reciprocal
// under (second, first). Replaces any earlier value for the pair.
DraftStatus put_judgment(Project& p, std::string_view first, std::string_view second,
                         const ahp::SaatyJudgment& value, std::string rationale = {},
                         double threshold = ahp::kDefaultConsistencyThreshold);

// Draft as a matrix; IncompleteMatrixError names the missing pairs.
ahp::PairwiseMatrix draft_matrix(const Project& p);

// Appends `m` with its report and returns the new index.
std::size_t add_matrix(Project& p, const ahp::PairwiseMatrix& m, MatrixOrigin origin,
                       double threshold = ahp::kDefaultConsistencyThreshold);

// Derives weights from matrices[index]. An unacceptable report raises
// Error(kConsistencyGate) unless `allow_unverified`, in which case the weights
// are marked override_unverified and a note is logged.
const ActiveWeights& activate_weights(Project& p, std::size_t matrix_index,
                                      ahp::WeightingMethod method, bool allow_unverified,
                                      const std::string& now);

// Validates ids and values; coverage is checked at aggregation.
void put_scores(Project& p, const std::string& alternative,
                std::vector<criteria::RubricScore> scores);

// Recomputes every evaluation from the score sheets and active weights.
const std::vector<criteria::Evaluation>& aggregate_all(
    Project& p, criteria::Normalization mode = criteria::Normalization::kRaw1To5);

const sensitivity::SensitivityReport& run_sensitivity(Project& p,
                                                      const sensitivity::SweepOptions& options = {});

// Records the run's transcript and returns its index in p.transcripts.
std::size_t record_panel_run(Project& p, const panel::ElicitationResult& result,
                             const std::string& model);

// Copies a run's judgments into the draft and stores its matrix with origin
// panel. Returns the matrix index.
std::size_t accept_panel_run(Project& p, std::size_t run_index,
                             double threshold = ahp::kDefaultConsistencyThreshold);

}  // namespace ahpeval::storage
