#include "ahpeval/error.hpp"

namespace ahpeval {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIncompleteMatrix: return "incomplete-matrix";
    case ErrorKind::kDuplicateJudgment: return "duplicate-judgment";
    case ErrorKind::kInvalidJudgment: return "invalid-judgment";
    case ErrorKind::kConvergenceFailure: return "convergence-failure";
    case ErrorKind::kUnsupportedOrder: return "unsupported-order";
    case ErrorKind::kInvalidScore: return "invalid-score";
    case ErrorKind::kScoreCoverage: return "score-coverage";
    case ErrorKind::kSetMismatch: return "set-mismatch";
    case ErrorKind::kInvalidCriteria: return "invalid-criteria";
    case ErrorKind::kIncompleteResponse: return "incomplete-response";
    case ErrorKind::kMalformedJudgment: return "malformed-judgment";
    case ErrorKind::kCoverageMismatch: return "coverage-mismatch";
    case ErrorKind::kTransport: return "elicitation-transport";
    case ErrorKind::kOutOfRangePerturbation: return "out-of-range-perturbation";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kVersionMismatch: return "version-mismatch";
    case ErrorKind::kIncompleteProject: return "incomplete-project";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kInvalidState: return "invalid-state";
    case ErrorKind::kConflict: return "conflict";
    case ErrorKind::kNotFound: return "not-found";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kConsistencyGate: return "consistency-gate";
  }
  return "unknown";
}

}  // namespace ahpeval
