#pragma once

#include <nlohmann/json.hpp>
#include <string_view>
#include <vector>

#include "rubric/catalog.hpp"
#include "rubric/engine.hpp"
#include "rubric/error.hpp"
#include "rubric/evaluation.hpp"
#include "rubric/model.hpp"
#include "rubric/sensitivity.hpp"

// JSON document schemas. Every entity document carries "schema_version";
// readers reject versions they do not know and treat a missing field as the
// current version. Fractions are raw doubles, never percentages.
namespace rubric {

inline constexpr std::string_view kSchemaVersion = "1";

using Json = nlohmann::json;

Json catalog_to_json(const CriteriaCatalog& catalog);
CriteriaCatalog catalog_from_json(const Json& doc);

Json profile_to_json(const WeightProfile& profile);
WeightProfile profile_from_json(const Json& doc);

Json article_to_json(const ArticleRecord& article);
ArticleRecord article_from_json(const Json& doc);

Json assessment_to_json(const Assessment& assessment);
Assessment assessment_from_json(const Json& doc);

Json weights_to_json(const engine::NormalizedWeights& weights);
Json rating_to_json(const engine::RatingReport& report);
Json ranking_to_json(const std::vector<evaluation::RankingEntry>& ranking);
Json sensitivity_to_json(const sensitivity::SensitivityReport& report);
std::vector<sensitivity::WhatIfDelta> deltas_from_json(const Json& doc);

Json violations_to_json(const std::vector<Violation>& violations);
Json error_to_json(const Error& error);

/// Parses text into JSON; throws Error{ParseError}.
Json parse_json(std::string_view text);

}  // namespace rubric
