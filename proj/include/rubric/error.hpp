#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rubric {

// Closed set of error codes shared by the library, the HTTP service and the CLI.
enum class ErrorCode {
  AllZeroImportance,
  MissingScore,
  MissingCategoryScore,
  UnknownCategory,
  UnknownCriterion,
  OutOfRange,
  IneffectiveCriterion,
  IncompleteAssessment,
  MixedProfile,
  InvalidPerturbation,
  ParseError,
  ValidationError,
  NotFound,
  Conflict,
  UnsupportedSchema,
  UnknownColumn,
  MalformedCell,
  IoError,
  BadRequest,
};

std::string_view to_string(ErrorCode code);
const std::vector<ErrorCode>& all_error_codes();

// Computation step at which an engine error arose.
enum class Step {
  None,
  CategoryWeights,   // Step 2
  CriterionWeights,  // Step 4
  CategoryScore,     // Step 6
  ArticleRating,     // Step 7
};

std::string_view to_string(Step step);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {},
        Step step = Step::None)
      : std::runtime_error(std::move(message)),
        code_(code),
        subject_(std::move(subject)),
        step_(step) {}

  ErrorCode code() const noexcept { return code_; }
  // Offending entity or field id, when there is one.
  const std::string& subject() const noexcept { return subject_; }
  Step step() const noexcept { return step_; }

  Error with_step(Step step) const {
    return Error(code_, what(), subject_, step);
  }

 private:
  ErrorCode code_;
  std::string subject_;
  Step step_;
};

}  // namespace rubric
