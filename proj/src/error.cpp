#include "rubric/error.hpp"

namespace rubric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AllZeroImportance: return "all_zero_importance";
    case ErrorCode::MissingScore: return "missing_score";
    case ErrorCode::MissingCategoryScore: return "missing_category_score";
    case ErrorCode::UnknownCategory: return "unknown_category";
    case ErrorCode::UnknownCriterion: return "unknown_criterion";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::IneffectiveCriterion: return "ineffective_criterion";
    case ErrorCode::IncompleteAssessment: return "incomplete_assessment";
    case ErrorCode::MixedProfile: return "mixed_profile";
    case ErrorCode::InvalidPerturbation: return "invalid_perturbation";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::ValidationError: return "validation_error";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::Conflict: return "conflict";
    case ErrorCode::UnsupportedSchema: return "unsupported_schema";
    case ErrorCode::UnknownColumn: return "unknown_column";
    case ErrorCode::MalformedCell: return "malformed_cell";
    case ErrorCode::IoError: return "io_error";
    case ErrorCode::BadRequest: return "bad_request";
  }
  return "unknown";
}

const std::vector<ErrorCode>& all_error_codes() {
  static const std::vector<ErrorCode> codes = {
      ErrorCode::AllZeroImportance,   ErrorCode::MissingScore,
      ErrorCode::MissingCategoryScore, ErrorCode::UnknownCategory,
      ErrorCode::UnknownCriterion,    ErrorCode::OutOfRange,
      ErrorCode::IneffectiveCriterion, ErrorCode::IncompleteAssessment,
      ErrorCode::MixedProfile,        ErrorCode::InvalidPerturbation,
      ErrorCode::ParseError,          ErrorCode::ValidationError,
      ErrorCode::NotFound,            ErrorCode::Conflict,
      ErrorCode::UnsupportedSchema,   ErrorCode::UnknownColumn,
      ErrorCode::MalformedCell,       ErrorCode::IoError,
      ErrorCode::BadRequest,
  };
  return codes;
}

std::string_view to_string(Step step) {
  switch (step) {
    case Step::None: return "";
    case Step::CategoryWeights: return "category_weights";
    case Step::CriterionWeights: return "criterion_weights";
    case Step::CategoryScore: return "category_score";
    case Step::ArticleRating: return "article_rating";
  }
  return "";
}

}  // namespace rubric
