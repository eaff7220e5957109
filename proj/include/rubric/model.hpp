#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rubric/catalog.hpp"

namespace rubric {

/// Evaluator-assigned importance, 0..5. Zero excludes the item.
class ImportanceRating {
 public:
  static constexpr int kMin = 0;
  static constexpr int kMax = 5;

  constexpr ImportanceRating() = default;
  /// Throws Error{OutOfRange} outside 0..5.
  explicit ImportanceRating(int value);

  constexpr int value() const noexcept { return value_; }
  constexpr bool excluded() const noexcept { return value_ == 0; }

  auto operator<=>(const ImportanceRating&) const = default;

 private:
  int value_ = 0;
};

/// How well an article addresses a criterion: 1..5, or not applicable.
class CriterionScore {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 5;

  /// Throws Error{OutOfRange} outside 1..5.
  static CriterionScore of(int value);
  static CriterionScore not_applicable() { return CriterionScore(); }
  /// "1".."5" or "NA"; throws Error{OutOfRange} otherwise.
  static CriterionScore parse(std::string_view text);

  bool is_not_applicable() const noexcept { return !value_; }
  bool is_numeric() const noexcept { return value_.has_value(); }
  int value() const { return *value_; }
  std::string to_string() const;

  bool operator==(const CriterionScore&) const = default;

 private:
  CriterionScore() = default;
  std::optional<int> value_;
};

std::string_view importance_label(int importance);
std::string_view score_label(int score);

using ImportanceMap = std::map<std::string, ImportanceRating>;

struct ProfileRef {
  std::string profile_id;
  std::int64_t revision = 1;

  bool operator==(const ProfileRef&) const = default;
};

/// A teaching program's importance ratings over one catalog. Derived weights
/// are not stored; they are recomputed on demand.
struct WeightProfile {
  std::string profile_id;
  std::string name;
  CatalogRef catalog_ref;
  ImportanceMap category_importance;   // category id -> rating
  ImportanceMap criterion_importance;  // criterion id -> rating
  std::string created_at;              // RFC 3339, UTC
  std::string updated_at;
  std::int64_t revision = 1;

  bool operator==(const WeightProfile&) const = default;

  ProfileRef ref() const { return {profile_id, revision}; }
  ImportanceRating category(std::string_view id) const;
  ImportanceRating criterion(std::string_view id) const;
};

struct ArticleRecord {
  std::string article_id;
  std::string title;
  std::optional<std::string> authors;
  std::optional<int> year;
  std::optional<std::string> source;
  std::optional<std::string> notes;
  std::int64_t revision = 1;

  bool operator==(const ArticleRecord&) const = default;
};

enum class AssessmentStatus { Draft, Complete };

std::string_view to_string(AssessmentStatus status);

struct Assessment {
  std::string assessment_id;
  std::string article_ref;
  ProfileRef profile_ref;
  std::map<std::string, CriterionScore> scores;  // criterion id -> score
  AssessmentStatus status = AssessmentStatus::Draft;
  std::string updated_at;
  std::int64_t revision = 1;

  bool operator==(const Assessment&) const = default;
};

/// Current UTC time as RFC 3339 with second precision.
std::string now_rfc3339();

}  // namespace rubric
