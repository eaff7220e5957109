#pragma once

#include <map>
#include <string>

#include "rubric/catalog.hpp"
#include "rubric/model.hpp"

// Pure scoring arithmetic: importance normalization, per-category weighted
// scores and the final weighted article rating. No I/O, no state.
namespace rubric::engine {

/// Id -> fraction in [0, 1]. Zero-importance entries are carried with weight 0.
struct NormalizedWeights {
  std::map<std::string, double> weights;

  double at(const std::string& id) const {
    auto it = weights.find(id);
    return it == weights.end() ? 0.0 : it->second;
  }
  bool operator==(const NormalizedWeights&) const = default;
};

struct RatingReport {
  std::string article_id;
  NormalizedWeights category_weights;                          // every category
  std::map<std::string, NormalizedWeights> criterion_weights;  // by category id
  std::map<std::string, double> category_scores;  // positive-weight categories
  double article_rating = 0.0;
  std::map<std::string, std::string> display_percentages;  // category id -> "80.00%"
  std::string article_rating_display;

  bool operator==(const RatingReport&) const = default;
};

/// weight(id) = importance(id) / sum of importances.
/// Throws Error{AllZeroImportance} when nothing has positive importance.
NormalizedWeights normalize(const ImportanceMap& importances);

/// (sum_j score_j * weight_j) / 5 over positive-weight criteria.
/// Throws Error{MissingScore} if a positive-weight criterion has no numeric
/// score.
double category_score(const std::map<std::string, CriterionScore>& scores,
                      const NormalizedWeights& criterion_weights);

/// sum_i score_i * weight_i over positive-weight categories.
/// Throws Error{MissingCategoryScore}.
double article_rating(const std::map<std::string, double>& category_scores,
                      const NormalizedWeights& category_weights);

/// Runs the four computed steps for one article. Criteria scored
/// not-applicable take importance 0, so the remaining weights within their
/// category renormalize. Errors carry the step they arose in.
RatingReport evaluate(const CriteriaCatalog& catalog,
                      const WeightProfile& profile,
                      const Assessment& assessment);

/// fraction * 100, rounded half away from zero to two decimals, with "%".
std::string format_percentage(double fraction);

}  // namespace rubric::engine
