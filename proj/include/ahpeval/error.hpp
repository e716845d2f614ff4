#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ahpeval {

enum class ErrorKind {
  kIncompleteMatrix,
  kDuplicateJudgment,
  kInvalidJudgment,
  kConvergenceFailure,
  kUnsupportedOrder,
  kInvalidScore,
  kScoreCoverage,
  kSetMismatch,
  kInvalidCriteria,
  kIncompleteResponse,
  kMalformedJudgment,
  kCoverageMismatch,
  kTransport,
  kOutOfRangePerturbation,
  kParse,
  kVersionMismatch,
  kIncompleteProject,
  kInvalidArgument,
  kInvalidState,
  kConflict,
  kNotFound,
  kIo,
  kConsistencyGate,
};

const char* to_string(ErrorKind kind);

// Base of every error raised by the library. `context()` accumulates
// outer frames (e.g. "round 2") as the error propagates.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& context() const noexcept { return context_; }

  void add_context(const std::string& frame) {
    context_ = context_.empty() ? frame : frame + ": " + context_;
    full_ = context_ + ": " + message_;
  }

  const char* what() const noexcept override {
    return full_.empty() ? std::runtime_error::what() : full_.c_str();
  }

 private:
  ErrorKind kind_;
  std::string message_;
  std::string context_;
  std::string full_;
};

struct PairIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const PairIndex&, const PairIndex&) = default;
  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

class IncompleteMatrixError : public Error {
 public:
  IncompleteMatrixError(std::vector<PairIndex> missing, const std::string& message)
      : Error(ErrorKind::kIncompleteMatrix, message), missing_(std::move(missing)) {}
  const std::vector<PairIndex>& missing() const noexcept { return missing_; }

 private:
  std::vector<PairIndex> missing_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(int iterations, double residual, const std::string& message)
      : Error(ErrorKind::kConvergenceFailure, message),
        iterations_(iterations),
        residual_(residual) {}
  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

// Missing pairs reported by criterion id, e.g. ("C3", "C7").
class IncompleteResponseError : public Error {
 public:
  IncompleteResponseError(std::vector<std::pair<std::string, std::string>> missing,
                          const std::string& message)
      : Error(ErrorKind::kIncompleteResponse, message), missing_(std::move(missing)) {}
  const std::vector<std::pair<std::string, std::string>>& missing() const noexcept {
    return missing_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> missing_;
};

class MalformedJudgmentError : public Error {
 public:
  MalformedJudgmentError(std::string span, std::size_t line, const std::string& message)
      : Error(ErrorKind::kMalformedJudgment, message), span_(std::move(span)), line_(line) {}
  const std::string& span() const noexcept { return span_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string span_;
  std::size_t line_;
};

class TransportError : public Error {
 public:
  TransportError(const std::string& message, bool retryable = true)
      : Error(ErrorKind::kTransport, message), retryable_(retryable) {}
  bool retryable() const noexcept { return retryable_; }

 private:
  bool retryable_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t byte_offset, const std::string& message)
      : Error(ErrorKind::kParse, message), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Validation failure tied to a field path such as "scores[3].value".
class ValidationError : public Error {
 public:
  ValidationError(ErrorKind kind, std::string field, const std::string& message)
      : Error(kind, message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace ahpeval
