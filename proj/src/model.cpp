#include "rubric/model.hpp"

#include <chrono>
#include <ctime>

#include "rubric/error.hpp"

namespace rubric {

ImportanceRating::ImportanceRating(int value) : value_(value) {
  if (value < kMin || value > kMax) {
    throw Error(ErrorCode::OutOfRange,
                "importance must be in 0..5, got " + std::to_string(value));
  }
}

CriterionScore CriterionScore::of(int value) {
  if (value < kMin || value > kMax) {
    throw Error(ErrorCode::OutOfRange,
                "score must be in 1..5, got " + std::to_string(value));
  }
  CriterionScore score;
  score.value_ = value;
  return score;
}

CriterionScore CriterionScore::parse(std::string_view text) {
  if (text == "NA") return not_applicable();
  if (text.size() == 1 && text[0] >= '0' && text[0] <= '9') {
    return of(text[0] - '0');
  }
  throw Error(ErrorCode::OutOfRange,
              "score must be 1..5 or NA, got '" + std::string(text) + "'");
}

std::string CriterionScore::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("NA");
}

std::string_view importance_label(int importance) {
  switch (importance) {
    case 0: return "Not Applicable";
    case 1: return "Slightly Important";
    case 2: return "Somewhat Important";
    case 3: return "Moderately Important";
    case 4: return "Important";
    case 5: return "Extremely Important";
    default: return "";
  }
}

std::string_view score_label(int score) {
  switch (score) {
    case 1: return "To a very small extent";
    case 2: return "To a small extent";
    case 3: return "To a moderate extent";
    case 4: return "To a large extent";
    case 5: return "To a very large extent";
    default: return "";
  }
}

ImportanceRating WeightProfile::category(std::string_view id) const {
  auto it = category_importance.find(std::string(id));
  return it == category_importance.end() ? ImportanceRating{} : it->second;
}

ImportanceRating WeightProfile::criterion(std::string_view id) const {
  auto it = criterion_importance.find(std::string(id));
  return it == criterion_importance.end() ? ImportanceRating{} : it->second;
}

std::string_view to_string(AssessmentStatus status) {
  return status == AssessmentStatus::Complete ? "complete" : "draft";
}

std::string now_rfc3339() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace rubric
