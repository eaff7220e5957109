#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rubric/catalog.hpp"
#include "rubric/model.hpp"

// CSV documents exchanged with spreadsheets and other tools.
namespace rubric::interchange {

/// Header: article_id,title,cat_<id>_score...,article_rating,rank, one row
/// per article in rank order. Category and rating cells are percentages with
/// two decimals; categories excluded by the profile are left empty.
/// Throws Error{IncompleteAssessment}, Error{MixedProfile}, Error{NotFound}
/// (article missing from `articles`).
std::string export_ratings(const CriteriaCatalog& catalog,
                           const WeightProfile& profile,
                           const std::vector<Assessment>& assessments,
                           const std::map<std::string, ArticleRecord>& articles);

/// Header: article_id followed by every effective criterion id. Cells are
/// 1..5, NA, or empty for unscored.
std::string export_assessments(const CriteriaCatalog& catalog,
                               const WeightProfile& profile,
                               const std::vector<Assessment>& assessments);

/// One assessment per row, pinned to `profile`, with ids from
/// evaluation::default_assessment_id and status from the completeness rule.
/// Throws Error{UnknownColumn}, Error{MalformedCell}, Error{ParseError}.
std::vector<Assessment> import_assessment_csv(std::string_view document,
                                              const CriteriaCatalog& catalog,
                                              const WeightProfile& profile);

}  // namespace rubric::interchange
