#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rubric/catalog.hpp"
#include "rubric/evaluation.hpp"
#include "rubric/model.hpp"

namespace rubric::sensitivity {

/// Transient importance change for a category or criterion id.
struct WhatIfDelta {
  std::string target;
  ImportanceRating new_importance;

  bool operator==(const WhatIfDelta&) const = default;
};

struct SensitivityReport {
  std::vector<evaluation::RankingEntry> baseline_ranking;
  std::vector<evaluation::RankingEntry> perturbed_ranking;
  std::map<std::string, double> rating_deltas;  // perturbed - baseline
  // Article id pairs (lexicographically ordered within and across pairs)
  // whose relative order differs between the two rankings.
  std::vector<std::pair<std::string, std::string>> rank_reversals;

  bool operator==(const SensitivityReport&) const = default;
};

/// Copy of `profile` with the deltas applied. Revision and timestamps are
/// left untouched so the copy still matches assessments pinned to the
/// baseline. Throws Error{UnknownCategory} for unknown targets.
WeightProfile apply_deltas(const WeightProfile& profile,
                           const CriteriaCatalog& catalog,
                           const std::vector<WhatIfDelta>& deltas);

/// Ranks under the baseline and the perturbed profile. Nothing is persisted.
/// Throws Error{InvalidPerturbation} when the perturbed profile is not
/// evaluable or leaves an assessment incomplete.
SensitivityReport what_if(const CriteriaCatalog& catalog,
                          const WeightProfile& profile,
                          const std::vector<Assessment>& assessments,
                          const std::vector<WhatIfDelta>& deltas);

/// For every category and every effective criterion, tries each +/-1
/// importance step that stays in 0..5 and is valid; true where any step
/// reverses some pair.
std::map<std::string, bool> stability_scan(const CriteriaCatalog& catalog,
                                           const WeightProfile& profile,
                                           const std::vector<Assessment>& assessments);

}  // namespace rubric::sensitivity
