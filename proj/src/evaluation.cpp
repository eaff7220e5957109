#include "rubric/evaluation.hpp"

#include <algorithm>

#include "rubric/error.hpp"

namespace rubric::evaluation {
namespace {

WeightProfile next_revision(const WeightProfile& profile) {
  WeightProfile next = profile;
  next.revision = profile.revision + 1;
  next.updated_at = now_rfc3339();
  return next;
}

void require_same_profile(const WeightProfile& profile,
                          const Assessment& assessment) {
  if (assessment.profile_ref != profile.ref()) {
    throw Error(ErrorCode::MixedProfile,
                "assessment " + assessment.assessment_id + " pins profile " +
                    assessment.profile_ref.profile_id + " r" +
                    std::to_string(assessment.profile_ref.revision) +
                    ", not " + profile.profile_id + " r" +
                    std::to_string(profile.revision),
                assessment.assessment_id);
  }
}

}  // namespace

WeightProfile make_profile(std::string profile_id, std::string name,
                           const CriteriaCatalog& catalog) {
  WeightProfile profile;
  profile.profile_id = std::move(profile_id);
  profile.name = std::move(name);
  profile.catalog_ref = catalog.ref();
  for (const auto& category : catalog.categories) {
    profile.category_importance[category.id] = ImportanceRating{};
    for (const auto& criterion : category.criteria)
      profile.criterion_importance[criterion.id] = ImportanceRating{};
  }
  profile.created_at = now_rfc3339();
  profile.updated_at = profile.created_at;
  profile.revision = 1;
  return profile;
}

WeightProfile set_category_importance(const WeightProfile& profile,
                                      const CriteriaCatalog& catalog,
                                      const std::string& category_id,
                                      ImportanceRating rating) {
  if (!catalog.find_category(category_id)) {
    throw Error(ErrorCode::UnknownCategory,
                "unknown category '" + category_id + "'", category_id);
  }
  WeightProfile next = next_revision(profile);
  next.category_importance[category_id] = rating;
  return next;
}

WeightProfile set_criterion_importance(const WeightProfile& profile,
                                       const CriteriaCatalog& catalog,
                                       const std::string& criterion_id,
                                       ImportanceRating rating) {
  if (!catalog.find_criterion(criterion_id)) {
    throw Error(ErrorCode::UnknownCriterion,
                "unknown criterion '" + criterion_id + "'", criterion_id);
  }
  WeightProfile next = next_revision(profile);
  next.criterion_importance[criterion_id] = rating;
  return next;
}

WeightProfile set_importance(const WeightProfile& profile,
                             const CriteriaCatalog& catalog,
                             const std::string& target, ImportanceRating rating) {
  if (catalog.find_category(target))
    return set_category_importance(profile, catalog, target, rating);
  if (catalog.find_criterion(target))
    return set_criterion_importance(profile, catalog, target, rating);
  throw Error(ErrorCode::UnknownCategory,
              "'" + target + "' is neither a category nor a criterion", target);
}

std::vector<Violation> validate_profile_structure(const CriteriaCatalog& catalog,
                                                  const WeightProfile& profile) {
  std::vector<Violation> out;
  if (profile.profile_id.empty()) out.push_back({"", "profile_id is empty"});
  if (profile.revision < 1)
    out.push_back({profile.profile_id, "revision must be >= 1"});
  if (profile.catalog_ref != catalog.ref())
    out.push_back({profile.catalog_ref.catalog_id,
                   "profile references catalog " + profile.catalog_ref.catalog_id +
                       "@" + profile.catalog_ref.version + ", not " +
                       catalog.catalog_id + "@" + catalog.version});
  for (const auto& [id, rating] : profile.category_importance) {
    if (!catalog.find_category(id)) out.push_back({id, "unknown category"});
  }
  for (const auto& [id, rating] : profile.criterion_importance) {
    if (!catalog.find_criterion(id)) out.push_back({id, "unknown criterion"});
  }
  return out;
}

std::vector<Violation> validate_profile(const CriteriaCatalog& catalog,
                                        const WeightProfile& profile) {
  auto out = validate_profile_structure(catalog, profile);
  bool any_category = false;
  for (const auto& category : catalog.categories) {
    if (profile.category(category.id).excluded()) continue;
    any_category = true;
    const bool any_criterion = std::any_of(
        category.criteria.begin(), category.criteria.end(),
        [&](const Criterion& c) { return !profile.criterion(c.id).excluded(); });
    if (!any_criterion)
      out.push_back({category.id, "category is selected but none of its "
                                  "criteria has positive importance"});
  }
  if (!any_category)
    out.push_back({profile.profile_id, "no category has positive importance"});
  return out;
}

bool is_effective(const CriteriaCatalog& catalog, const WeightProfile& profile,
                  const std::string& criterion_id) {
  const Criterion* criterion = catalog.find_criterion(criterion_id);
  return criterion && !profile.category(criterion->category_id).excluded() &&
         !profile.criterion(criterion_id).excluded();
}

std::vector<std::string> effective_criteria(const CriteriaCatalog& catalog,
                                            const WeightProfile& profile) {
  std::vector<std::string> out;
  for (const auto& category : catalog.categories) {
    if (profile.category(category.id).excluded()) continue;
    for (const auto& criterion : category.criteria) {
      if (!profile.criterion(criterion.id).excluded()) out.push_back(criterion.id);
    }
  }
  return out;
}

std::string default_assessment_id(const std::string& article_id,
                                  const ProfileRef& profile) {
  return article_id + "--" + profile.profile_id + "-r" +
         std::to_string(profile.revision);
}

Assessment make_assessment(std::string assessment_id, std::string article_id,
                           const WeightProfile& profile) {
  Assessment assessment;
  assessment.assessment_id = assessment_id.empty()
                                 ? default_assessment_id(article_id, profile.ref())
                                 : std::move(assessment_id);
  assessment.article_ref = std::move(article_id);
  assessment.profile_ref = profile.ref();
  assessment.updated_at = now_rfc3339();
  return assessment;
}

std::vector<Violation> completeness_gaps(const CriteriaCatalog& catalog,
                                         const WeightProfile& profile,
                                         const Assessment& assessment) {
  std::vector<Violation> out;
  for (const auto& category : catalog.categories) {
    if (profile.category(category.id).excluded()) continue;
    bool any_effective = false;
    bool any_numeric = false;
    for (const auto& criterion : category.criteria) {
      if (profile.criterion(criterion.id).excluded()) continue;
      any_effective = true;
      auto it = assessment.scores.find(criterion.id);
      if (it == assessment.scores.end()) {
        out.push_back({criterion.id, "criterion is not scored"});
      } else if (it->second.is_numeric()) {
        any_numeric = true;
      }
    }
    // A category without effective criteria is a profile defect; the engine
    // reports it when evaluating.
    if (any_effective && !any_numeric)
      out.push_back({category.id, "category has no numerically scored criterion"});
  }
  return out;
}

AssessmentStatus compute_status(const CriteriaCatalog& catalog,
                                const WeightProfile& profile,
                                const Assessment& assessment) {
  return completeness_gaps(catalog, profile, assessment).empty()
             ? AssessmentStatus::Complete
             : AssessmentStatus::Draft;
}

std::vector<Violation> validate_assessment(const CriteriaCatalog& catalog,
                                           const WeightProfile& profile,
                                           const Assessment& assessment) {
  std::vector<Violation> out;
  if (assessment.assessment_id.empty())
    out.push_back({"", "assessment_id is empty"});
  if (assessment.article_ref.empty())
    out.push_back({assessment.assessment_id, "article_ref is empty"});
  if (assessment.profile_ref != profile.ref())
    out.push_back({assessment.profile_ref.profile_id,
                   "assessment does not pin the supplied profile revision"});
  for (const auto& [id, score] : assessment.scores) {
    if (!catalog.find_criterion(id)) {
      out.push_back({id, "unknown criterion"});
    } else if (!is_effective(catalog, profile, id)) {
      out.push_back({id, "criterion is excluded by the profile"});
    }
  }
  if (assessment.status != compute_status(catalog, profile, assessment))
    out.push_back({assessment.assessment_id,
                   "status does not match the completeness rule"});
  return out;
}

Assessment set_score(const Assessment& assessment, const CriteriaCatalog& catalog,
                     const WeightProfile& profile, const std::string& criterion_id,
                     std::optional<CriterionScore> score) {
  require_same_profile(profile, assessment);
  if (!catalog.find_criterion(criterion_id)) {
    throw Error(ErrorCode::UnknownCriterion,
                "unknown criterion '" + criterion_id + "'", criterion_id);
  }
  Assessment next = assessment;
  if (score) {
    if (!is_effective(catalog, profile, criterion_id)) {
      throw Error(ErrorCode::IneffectiveCriterion,
                  "criterion " + criterion_id +
                      " is excluded by the profile and cannot be scored",
                  criterion_id);
    }
    next.scores.insert_or_assign(criterion_id, *score);
  } else {
    next.scores.erase(criterion_id);
  }
  next.status = compute_status(catalog, profile, next);
  next.revision = assessment.revision + 1;
  next.updated_at = now_rfc3339();
  return next;
}

engine::RatingReport rate(const CriteriaCatalog& catalog,
                          const WeightProfile& profile,
                          const Assessment& assessment) {
  require_same_profile(profile, assessment);
  auto gaps = completeness_gaps(catalog, profile, assessment);
  if (!gaps.empty()) {
    throw Error(ErrorCode::IncompleteAssessment,
                "assessment " + assessment.assessment_id + " is incomplete: [" +
                    gaps.front().id + "] " + gaps.front().message,
                assessment.assessment_id);
  }
  return engine::evaluate(catalog, profile, assessment);
}

std::vector<RankingEntry> order_ranking(std::vector<RankingEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const RankingEntry& a, const RankingEntry& b) {
              if (a.article_rating != b.article_rating)
                return a.article_rating > b.article_rating;
              if (a.article_id != b.article_id) return a.article_id < b.article_id;
              return a.assessment_id < b.assessment_id;
            });
  for (std::size_t i = 0; i < entries.size(); ++i)
    entries[i].rank = static_cast<int>(i + 1);
  return entries;
}

std::vector<RankingEntry> rank_articles(const CriteriaCatalog& catalog,
                                        const WeightProfile& profile,
                                        const std::vector<Assessment>& assessments) {
  std::vector<RankingEntry> entries;
  entries.reserve(assessments.size());
  for (const auto& assessment : assessments) {
    const auto report = rate(catalog, profile, assessment);
    entries.push_back({assessment.article_ref, assessment.assessment_id,
                       report.article_rating, 0, report.category_scores});
  }
  return order_ranking(std::move(entries));
}

}  // namespace rubric::evaluation
