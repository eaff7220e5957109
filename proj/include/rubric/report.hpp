#pragma once

#include <string>
#include <vector>

#include "rubric/catalog.hpp"
#include "rubric/engine.hpp"
#include "rubric/evaluation.hpp"
#include "rubric/model.hpp"
#include "rubric/sensitivity.hpp"

namespace rubric::report {

/// The two-category scenario used by `demo`: Clarity 4, Succinctness 2;
/// criteria 1.1=5, 2.1=4, 2.2=5; scores 1.1=4, 2.1=5, 2.2=2.
struct WorkedExample {
  CriteriaCatalog catalog;
  WeightProfile profile;
  ArticleRecord article;
  Assessment assessment;
};

/// Timestamps are fixed so the rendered walkthrough is byte-stable.
WorkedExample worked_example();

/// Step-by-step walkthrough of all seven steps, ending with the rating.
std::string render_walkthrough(const CriteriaCatalog& catalog,
                               const WeightProfile& profile,
                               const Assessment& assessment);

std::string render_catalog(const CriteriaCatalog& catalog);
std::string render_profile(const CriteriaCatalog& catalog, const WeightProfile& profile);
std::string render_rating(const CriteriaCatalog& catalog, const engine::RatingReport& report);
std::string render_ranking(const std::vector<evaluation::RankingEntry>& ranking);
std::string render_sensitivity(const sensitivity::SensitivityReport& report);

}  // namespace rubric::report
