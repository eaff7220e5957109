#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rubric/catalog.hpp"
#include "rubric/engine.hpp"
#include "rubric/model.hpp"

// Profile editing, assessment scoring with completeness tracking, and
// multi-article ranking.
namespace rubric::evaluation {

WeightProfile make_profile(std::string profile_id, std::string name,
                           const CriteriaCatalog& catalog);

/// Returns the next revision. Throws Error{UnknownCategory}.
WeightProfile set_category_importance(const WeightProfile& profile,
                                      const CriteriaCatalog& catalog,
                                      const std::string& category_id,
                                      ImportanceRating rating);

/// Returns the next revision. Throws Error{UnknownCriterion}.
WeightProfile set_criterion_importance(const WeightProfile& profile,
                                       const CriteriaCatalog& catalog,
                                       const std::string& criterion_id,
                                       ImportanceRating rating);

/// Sets whichever of category or criterion `target` names.
WeightProfile set_importance(const WeightProfile& profile,
                             const CriteriaCatalog& catalog,
                             const std::string& target, ImportanceRating rating);

/// Ids must exist in the catalog the profile references. Zero importances
/// are allowed here; they fail at evaluation time.
std::vector<Violation> validate_profile_structure(const CriteriaCatalog& catalog,
                                                  const WeightProfile& profile);

/// Structure plus: some category > 0, and every positive category has a
/// positive criterion.
std::vector<Violation> validate_profile(const CriteriaCatalog& catalog,
                                        const WeightProfile& profile);

/// Criteria whose category importance and own importance are both > 0.
bool is_effective(const CriteriaCatalog& catalog, const WeightProfile& profile,
                  const std::string& criterion_id);
std::vector<std::string> effective_criteria(const CriteriaCatalog& catalog,
                                            const WeightProfile& profile);

/// Deterministic id used when an assessment is created without one.
std::string default_assessment_id(const std::string& article_id,
                                  const ProfileRef& profile);

Assessment make_assessment(std::string assessment_id, std::string article_id,
                           const WeightProfile& profile);

/// Violations of the completeness rule, each naming a criterion or category.
std::vector<Violation> completeness_gaps(const CriteriaCatalog& catalog,
                                         const WeightProfile& profile,
                                         const Assessment& assessment);

AssessmentStatus compute_status(const CriteriaCatalog& catalog,
                                const WeightProfile& profile,
                                const Assessment& assessment);

/// Scores only criteria that are effective under the profile. Each score
/// must be numeric or not-applicable, and every effective category keeps at
/// least one numeric score if complete.
std::vector<Violation> validate_assessment(const CriteriaCatalog& catalog,
                                           const WeightProfile& profile,
                                           const Assessment& assessment);

/// std::nullopt clears the criterion. Returns the next revision with status
/// recomputed. Throws Error{UnknownCriterion} or Error{IneffectiveCriterion}.
Assessment set_score(const Assessment& assessment, const CriteriaCatalog& catalog,
                     const WeightProfile& profile, const std::string& criterion_id,
                     std::optional<CriterionScore> score);

/// Checks the assessment pins this profile revision and is complete, then
/// evaluates. Throws Error{MixedProfile}, Error{IncompleteAssessment} or an
/// engine error.
engine::RatingReport rate(const CriteriaCatalog& catalog,
                          const WeightProfile& profile,
                          const Assessment& assessment);

struct RankingEntry {
  std::string article_id;
  std::string assessment_id;
  double article_rating = 0.0;
  int rank = 0;
  std::map<std::string, double> category_scores;

  bool operator==(const RankingEntry&) const = default;
};

/// Sorts by rating descending, ties by article id ascending; ranks 1..N.
std::vector<RankingEntry> order_ranking(std::vector<RankingEntry> entries);

/// Throws Error{MixedProfile} or Error{IncompleteAssessment}.
std::vector<RankingEntry> rank_articles(const CriteriaCatalog& catalog,
                                        const WeightProfile& profile,
                                        const std::vector<Assessment>& assessments);

}  // namespace rubric::evaluation
