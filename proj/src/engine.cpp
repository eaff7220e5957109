#include "rubric/engine.hpp"

#include <cmath>
#include <cstdio>

#include "rubric/error.hpp"

namespace rubric::engine {

NormalizedWeights normalize(const ImportanceMap& importances) {
  long total = 0;
  for (const auto& [id, importance] : importances) total += importance.value();
  if (total <= 0) {
    throw Error(ErrorCode::AllZeroImportance,
                "all importances are zero; nothing is selected at this level");
  }
  NormalizedWeights out;
  for (const auto& [id, importance] : importances) {
    out.weights[id] =
        static_cast<double>(importance.value()) / static_cast<double>(total);
  }
  return out;
}

double category_score(const std::map<std::string, CriterionScore>& scores,
                      const NormalizedWeights& criterion_weights) {
  double sum = 0.0;
  for (const auto& [id, weight] : criterion_weights.weights) {
    if (weight <= 0.0) continue;
    auto it = scores.find(id);
    if (it == scores.end() || !it->second.is_numeric()) {
      throw Error(ErrorCode::MissingScore,
                  "criterion " + id + " has positive weight but no score", id);
    }
    sum += it->second.value() * weight;
  }
  return sum / 5.0;
}

double article_rating(const std::map<std::string, double>& category_scores,
                      const NormalizedWeights& category_weights) {
  double sum = 0.0;
  for (const auto& [id, weight] : category_weights.weights) {
    if (weight <= 0.0) continue;
    auto it = category_scores.find(id);
    if (it == category_scores.end()) {
      throw Error(ErrorCode::MissingCategoryScore,
                  "category " + id + " has positive weight but no score", id);
    }
    sum += it->second * weight;
  }
  return sum;
}

RatingReport evaluate(const CriteriaCatalog& catalog,
                      const WeightProfile& profile,
                      const Assessment& assessment) {
  RatingReport report;
  report.article_id = assessment.article_ref;

  ImportanceMap category_importance;
  for (const auto& category : catalog.categories) {
    category_importance[category.id] = profile.category(category.id);
  }
  try {
    report.category_weights = normalize(category_importance);
  } catch (const Error& e) {
    throw e.with_step(Step::CategoryWeights);
  }

  for (const auto& category : catalog.categories) {
    NormalizedWeights& weights = report.criterion_weights[category.id];
    if (report.category_weights.at(category.id) <= 0.0) {
      for (const auto& criterion : category.criteria)
        weights.weights[criterion.id] = 0.0;
      continue;
    }

    ImportanceMap criterion_importance;
    for (const auto& criterion : category.criteria) {
      auto score = assessment.scores.find(criterion.id);
      const bool not_applicable =
          score != assessment.scores.end() && score->second.is_not_applicable();
      criterion_importance[criterion.id] =
          not_applicable ? ImportanceRating{} : profile.criterion(criterion.id);
    }
    try {
      weights = normalize(criterion_importance);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "category " + category.id + ": no criterion left to weigh",
                  category.id, Step::CriterionWeights);
    }

    try {
      report.category_scores[category.id] =
          category_score(assessment.scores, weights);
    } catch (const Error& e) {
      throw e.with_step(Step::CategoryScore);
    }
  }

  try {
    report.article_rating =
        article_rating(report.category_scores, report.category_weights);
  } catch (const Error& e) {
    throw e.with_step(Step::ArticleRating);
  }

  for (const auto& [id, score] : report.category_scores) {
    report.display_percentages[id] = format_percentage(score);
  }
  report.article_rating_display = format_percentage(report.article_rating);
  return report;
}

std::string format_percentage(double fraction) {
  // Hundredths of a percent. Values within 1e-7 of a .5 boundary count as
  // exact ties so that binary noise cannot defeat half-away-from-zero.
  const double scaled = std::fabs(fraction) * 10000.0;
  double units = std::floor(scaled);
  if (scaled - units >= 0.5 - 1e-7) units += 1.0;
  const auto whole = static_cast<long long>(units);
  const bool negative = fraction < 0.0 && whole != 0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld%%", negative ? "-" : "",
                whole / 100, whole % 100);
  return buf;
}

}  // namespace rubric::engine
