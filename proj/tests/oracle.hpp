#pragma once

// Independent recomputation of the rating formulas with plain nested loops
// over integer tables. Shares nothing with the engine beyond the public data
// structs used to hand an instance to it.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "rubric/catalog.hpp"
#include "rubric/model.hpp"

namespace oracle {

// score value 0 marks "not applicable" inside the oracle tables.
struct Instance {
  std::vector<int> category_importance;
  std::vector<std::vector<int>> criterion_importance;
  std::vector<std::vector<int>> score;
};

inline double category_weight(const Instance& in, std::size_t i) {
  int total = 0;
  for (int v : in.category_importance) total += v;
  return static_cast<double>(in.category_importance[i]) / total;
}

inline double criterion_weight(const Instance& in, std::size_t i, std::size_t j) {
  int total = 0;
  for (std::size_t k = 0; k < in.criterion_importance[i].size(); ++k)
    if (in.score[i][k] != 0) total += in.criterion_importance[i][k];
  if (in.score[i][j] == 0) return 0.0;
  return static_cast<double>(in.criterion_importance[i][j]) / total;
}

inline double category_score(const Instance& in, std::size_t i) {
  double sum = 0.0;
  for (std::size_t j = 0; j < in.criterion_importance[i].size(); ++j)
    sum += in.score[i][j] * criterion_weight(in, i, j);
  return sum / 5.0;
}

inline double rating(const Instance& in) {
  double sum = 0.0;
  for (std::size_t i = 0; i < in.category_importance.size(); ++i) {
    if (in.category_importance[i] == 0) continue;
    sum += category_score(in, i) * category_weight(in, i);
  }
  return sum;
}

// Random instance satisfying the profile and completeness rules: some
// category selected, every selected category has a positive-importance
// criterion with a numeric score. `na_rate` is the chance a criterion is
// marked not-applicable (never the last numeric one).
inline Instance random_instance(std::mt19937_64& rng, double na_rate = 0.0,
                                std::size_t max_categories = 11,
                                std::size_t max_criteria = 7) {
  std::uniform_int_distribution<std::size_t> ncat(1, max_categories);
  std::uniform_int_distribution<std::size_t> ncri(1, max_criteria);
  std::uniform_int_distribution<int> imp(0, 5);
  std::uniform_int_distribution<int> positive(1, 5);
  std::uniform_int_distribution<int> sc(1, 5);
  std::bernoulli_distribution na(na_rate);

  Instance in;
  const std::size_t n = ncat(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = ncri(rng);
    in.category_importance.push_back(imp(rng));
    std::vector<int> importances, scores;
    for (std::size_t j = 0; j < m; ++j) {
      importances.push_back(imp(rng));
      scores.push_back(sc(rng));
    }
    in.criterion_importance.push_back(importances);
    in.score.push_back(scores);
  }
  std::uniform_int_distribution<std::size_t> pick_cat(0, n - 1);
  if (std::all_of(in.category_importance.begin(), in.category_importance.end(),
                  [](int v) { return v == 0; }))
    in.category_importance[pick_cat(rng)] = positive(rng);

  for (std::size_t i = 0; i < n; ++i) {
    auto& importances = in.criterion_importance[i];
    std::uniform_int_distribution<std::size_t> pick(0, importances.size() - 1);
    if (std::all_of(importances.begin(), importances.end(), [](int v) { return v == 0; }))
      importances[pick(rng)] = positive(rng);
    // Mark some positive criteria NA while keeping one numeric.
    std::size_t numeric = 0;
    for (int v : importances) numeric += v > 0;
    for (std::size_t j = 0; j < importances.size(); ++j) {
      if (importances[j] > 0 && numeric > 1 && na(rng)) {
        in.score[i][j] = 0;
        --numeric;
      }
    }
  }
  return in;
}

struct Model {
  rubric::CriteriaCatalog catalog;
  rubric::WeightProfile profile;
  rubric::Assessment assessment;
};

inline std::string category_id(std::size_t i) { return std::to_string(i + 1); }
inline std::string criterion_id(std::size_t i, std::size_t j) {
  return category_id(i) + "." + std::to_string(j + 1);
}

// Fills the public structs directly; scores are set only for effective
// criteria so the assessment is valid under the profile.
inline Model to_model(const Instance& in) {
  using namespace rubric;
  Model m;
  m.catalog.catalog_id = "random";
  m.catalog.version = "1";
  m.profile.profile_id = "p";
  m.profile.catalog_ref = {"random", "1"};
  m.profile.revision = 1;
  m.assessment.assessment_id = "a";
  m.assessment.article_ref = "article";
  m.assessment.profile_ref = {"p", 1};
  for (std::size_t i = 0; i < in.category_importance.size(); ++i) {
    Category category{category_id(i), "Category " + category_id(i), {}};
    m.profile.category_importance[category.id] = ImportanceRating(in.category_importance[i]);
    for (std::size_t j = 0; j < in.criterion_importance[i].size(); ++j) {
      const auto id = criterion_id(i, j);
      category.criteria.push_back({id, "Criterion " + id, category.id});
      m.profile.criterion_importance[id] = ImportanceRating(in.criterion_importance[i][j]);
      if (in.category_importance[i] > 0 && in.criterion_importance[i][j] > 0) {
        m.assessment.scores.insert_or_assign(
            id, in.score[i][j] == 0 ? CriterionScore::not_applicable()
                                    : CriterionScore::of(in.score[i][j]));
      }
    }
    m.catalog.categories.push_back(std::move(category));
  }
  m.assessment.status = AssessmentStatus::Complete;
  return m;
}

}  // namespace oracle
