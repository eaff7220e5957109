#include "rubric/sensitivity.hpp"

#include <algorithm>
#include <set>

#include "rubric/engine.hpp"
#include "rubric/error.hpp"

namespace rubric::sensitivity {
namespace {

std::vector<std::pair<std::string, std::string>> find_reversals(
    const std::vector<evaluation::RankingEntry>& baseline,
    const std::vector<evaluation::RankingEntry>& perturbed) {
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < perturbed.size(); ++i)
    position[perturbed[i].article_id] = i;

  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < baseline.size(); ++i) {
    for (std::size_t j = i + 1; j < baseline.size(); ++j) {
      const auto& ahead = baseline[i].article_id;
      const auto& behind = baseline[j].article_id;
      if (position.at(ahead) > position.at(behind))
        out.emplace_back(std::min(ahead, behind), std::max(ahead, behind));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_unique_articles(const std::vector<Assessment>& assessments) {
  std::set<std::string> seen;
  for (const auto& a : assessments) {
    if (!seen.insert(a.article_ref).second) {
      throw Error(ErrorCode::ValidationError,
                  "article " + a.article_ref + " is assessed more than once",
                  a.article_ref);
    }
  }
}

}  // namespace

WeightProfile apply_deltas(const WeightProfile& profile,
                           const CriteriaCatalog& catalog,
                           const std::vector<WhatIfDelta>& deltas) {
  WeightProfile out = profile;
  for (const auto& delta : deltas) {
    if (catalog.find_category(delta.target)) {
      out.category_importance[delta.target] = delta.new_importance;
    } else if (catalog.find_criterion(delta.target)) {
      out.criterion_importance[delta.target] = delta.new_importance;
    } else {
      throw Error(ErrorCode::UnknownCategory,
                  "what-if target '" + delta.target +
                      "' is neither a category nor a criterion",
                  delta.target);
    }
  }
  return out;
}

SensitivityReport what_if(const CriteriaCatalog& catalog,
                          const WeightProfile& profile,
                          const std::vector<Assessment>& assessments,
                          const std::vector<WhatIfDelta>& deltas) {
  require_unique_articles(assessments);
  SensitivityReport report;
  report.baseline_ranking = evaluation::rank_articles(catalog, profile, assessments);

  const WeightProfile perturbed = apply_deltas(profile, catalog, deltas);
  auto violations = evaluation::validate_profile(catalog, perturbed);
  if (!violations.empty()) {
    throw Error(ErrorCode::InvalidPerturbation,
                "perturbed profile is not evaluable: [" + violations.front().id +
                    "] " + violations.front().message,
                violations.front().id);
  }

  std::vector<evaluation::RankingEntry> entries;
  for (const auto& assessment : assessments) {
    auto gaps = evaluation::completeness_gaps(catalog, perturbed, assessment);
    if (!gaps.empty()) {
      throw Error(ErrorCode::InvalidPerturbation,
                  "perturbation leaves assessment " + assessment.assessment_id +
                      " incomplete: [" + gaps.front().id + "] " +
                      gaps.front().message,
                  gaps.front().id);
    }
    const auto rating = engine::evaluate(catalog, perturbed, assessment);
    entries.push_back({assessment.article_ref, assessment.assessment_id,
                       rating.article_rating, 0, rating.category_scores});
  }
  report.perturbed_ranking = evaluation::order_ranking(std::move(entries));

  for (const auto& entry : report.perturbed_ranking)
    report.rating_deltas[entry.article_id] = entry.article_rating;
  for (const auto& entry : report.baseline_ranking)
    report.rating_deltas[entry.article_id] -= entry.article_rating;

  report.rank_reversals =
      find_reversals(report.baseline_ranking, report.perturbed_ranking);
  return report;
}

std::map<std::string, bool> stability_scan(const CriteriaCatalog& catalog,
                                           const WeightProfile& profile,
                                           const std::vector<Assessment>& assessments) {
  // Fails fast with the baseline's own errors.
  (void)what_if(catalog, profile, assessments, {});

  std::vector<std::pair<std::string, int>> targets;
  for (const auto& category : catalog.categories)
    targets.emplace_back(category.id, profile.category(category.id).value());
  for (const auto& id : evaluation::effective_criteria(catalog, profile))
    targets.emplace_back(id, profile.criterion(id).value());

  std::map<std::string, bool> flags;
  for (const auto& [target, current] : targets) {
    bool reversed = false;
    for (int step : {-1, +1}) {
      const int next = current + step;
      if (next < ImportanceRating::kMin || next > ImportanceRating::kMax) continue;
      try {
        auto report = what_if(catalog, profile, assessments,
                              {{target, ImportanceRating(next)}});
        reversed = reversed || !report.rank_reversals.empty();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidPerturbation) throw;
      }
    }
    flags[target] = reversed;
  }
  return flags;
}

}  // namespace rubric::sensitivity
