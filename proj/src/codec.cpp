#include "rubric/codec.hpp"

namespace rubric {
namespace {

void check_schema(const Json& doc, std::string_view kind) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError,
                std::string(kind) + " document must be a JSON object");
  }
  auto it = doc.find("schema_version");
  if (it == doc.end()) return;
  if (!it->is_string() || it->get<std::string>() != kSchemaVersion) {
    throw Error(ErrorCode::UnsupportedSchema,
                std::string(kind) + " document has unsupported schema_version " +
                    it->dump());
  }
}

// Runs a reader and converts nlohmann type/key errors to ParseError.
template <typename F>
auto guarded(std::string_view kind, F&& read) {
  try {
    return read();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError,
                "malformed " + std::string(kind) + " document: " + e.what());
  }
}

template <typename T>
std::optional<T> optional_field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

Json importances_to_json(const ImportanceMap& map) {
  Json out = Json::object();
  for (const auto& [id, rating] : map) out[id] = rating.value();
  return out;
}

ImportanceMap importances_from_json(const Json& doc) {
  ImportanceMap out;
  for (const auto& [id, value] : doc.items()) {
    out[id] = ImportanceRating(value.get<int>());
  }
  return out;
}

Json scores_to_json(const std::map<std::string, CriterionScore>& scores) {
  Json out = Json::object();
  for (const auto& [id, score] : scores) {
    if (score.is_numeric()) {
      out[id] = score.value();
    } else {
      out[id] = "NA";
    }
  }
  return out;
}

std::map<std::string, CriterionScore> scores_from_json(const Json& doc) {
  std::map<std::string, CriterionScore> out;
  for (const auto& [id, value] : doc.items()) {
    if (value.is_string()) {
      out.insert_or_assign(id, CriterionScore::parse(value.get<std::string>()));
    } else {
      out.insert_or_assign(id, CriterionScore::of(value.get<int>()));
    }
  }
  return out;
}

Json ranking_entry_to_json(const evaluation::RankingEntry& entry) {
  return Json{{"rank", entry.rank},
              {"article_id", entry.article_id},
              {"assessment_id", entry.assessment_id},
              {"article_rating", entry.article_rating},
              {"display", engine::format_percentage(entry.article_rating)},
              {"category_scores", entry.category_scores}};
}

}  // namespace

Json catalog_to_json(const CriteriaCatalog& catalog) {
  Json categories = Json::array();
  for (const auto& category : catalog.categories) {
    Json criteria = Json::array();
    for (const auto& criterion : category.criteria)
      criteria.push_back({{"id", criterion.id}, {"prompt", criterion.prompt}});
    categories.push_back(
        {{"id", category.id}, {"name", category.name}, {"criteria", criteria}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"catalog_id", catalog.catalog_id},
              {"version", catalog.version},
              {"categories", categories}};
}

CriteriaCatalog catalog_from_json(const Json& doc) {
  check_schema(doc, "catalog");
  return guarded("catalog", [&] {
    CriteriaCatalog catalog;
    catalog.catalog_id = doc.at("catalog_id").get<std::string>();
    catalog.version = doc.at("version").get<std::string>();
    for (const auto& c : doc.at("categories")) {
      Category category;
      category.id = c.at("id").get<std::string>();
      category.name = c.at("name").get<std::string>();
      for (const auto& k : c.at("criteria")) {
        category.criteria.push_back({k.at("id").get<std::string>(),
                                     k.at("prompt").get<std::string>(),
                                     category.id});
      }
      catalog.categories.push_back(std::move(category));
    }
    return catalog;
  });
}

Json profile_to_json(const WeightProfile& profile) {
  return Json{{"schema_version", kSchemaVersion},
              {"profile_id", profile.profile_id},
              {"name", profile.name},
              {"catalog_ref",
               {{"catalog_id", profile.catalog_ref.catalog_id},
                {"version", profile.catalog_ref.version}}},
              {"category_importance", importances_to_json(profile.category_importance)},
              {"criterion_importance", importances_to_json(profile.criterion_importance)},
              {"created_at", profile.created_at},
              {"updated_at", profile.updated_at},
              {"revision", profile.revision}};
}

WeightProfile profile_from_json(const Json& doc) {
  check_schema(doc, "profile");
  return guarded("profile", [&] {
    WeightProfile profile;
    profile.profile_id = doc.at("profile_id").get<std::string>();
    profile.name = doc.value("name", std::string{});
    const auto& ref = doc.at("catalog_ref");
    profile.catalog_ref = {ref.at("catalog_id").get<std::string>(),
                           ref.at("version").get<std::string>()};
    profile.category_importance =
        importances_from_json(doc.value("category_importance", Json::object()));
    profile.criterion_importance =
        importances_from_json(doc.value("criterion_importance", Json::object()));
    profile.created_at = doc.value("created_at", std::string{});
    profile.updated_at = doc.value("updated_at", std::string{});
    profile.revision = doc.value("revision", std::int64_t{1});
    return profile;
  });
}

Json article_to_json(const ArticleRecord& article) {
  Json out{{"schema_version", kSchemaVersion},
           {"article_id", article.article_id},
           {"title", article.title},
           {"revision", article.revision}};
  if (article.authors) out["authors"] = *article.authors;
  if (article.year) out["year"] = *article.year;
  if (article.source) out["source"] = *article.source;
  if (article.notes) out["notes"] = *article.notes;
  return out;
}

ArticleRecord article_from_json(const Json& doc) {
  check_schema(doc, "article");
  return guarded("article", [&] {
    ArticleRecord article;
    article.article_id = doc.at("article_id").get<std::string>();
    article.title = doc.at("title").get<std::string>();
    article.authors = optional_field<std::string>(doc, "authors");
    article.year = optional_field<int>(doc, "year");
    article.source = optional_field<std::string>(doc, "source");
    article.notes = optional_field<std::string>(doc, "notes");
    article.revision = doc.value("revision", std::int64_t{1});
    return article;
  });
}

Json assessment_to_json(const Assessment& assessment) {
  return Json{{"schema_version", kSchemaVersion},
              {"assessment_id", assessment.assessment_id},
              {"article_ref", assessment.article_ref},
              {"profile_ref",
               {{"profile_id", assessment.profile_ref.profile_id},
                {"revision", assessment.profile_ref.revision}}},
              {"scores", scores_to_json(assessment.scores)},
              {"status", to_string(assessment.status)},
              {"updated_at", assessment.updated_at},
              {"revision", assessment.revision}};
}

Assessment assessment_from_json(const Json& doc) {
  check_schema(doc, "assessment");
  return guarded("assessment", [&] {
    Assessment assessment;
    assessment.assessment_id = doc.value("assessment_id", std::string{});
    assessment.article_ref = doc.at("article_ref").get<std::string>();
    const auto& ref = doc.at("profile_ref");
    assessment.profile_ref = {ref.at("profile_id").get<std::string>(),
                              ref.at("revision").get<std::int64_t>()};
    assessment.scores = scores_from_json(doc.value("scores", Json::object()));
    const auto status = doc.value("status", std::string("draft"));
    if (status == "complete") {
      assessment.status = AssessmentStatus::Complete;
    } else if (status == "draft") {
      assessment.status = AssessmentStatus::Draft;
    } else {
      throw Error(ErrorCode::ParseError, "unknown assessment status '" + status + "'");
    }
    assessment.updated_at = doc.value("updated_at", std::string{});
    assessment.revision = doc.value("revision", std::int64_t{1});
    return assessment;
  });
}

Json weights_to_json(const engine::NormalizedWeights& weights) {
  Json out = Json::object();
  for (const auto& [id, w] : weights.weights)
    out[id] = {{"weight", w}, {"display", engine::format_percentage(w)}};
  return out;
}

Json rating_to_json(const engine::RatingReport& report) {
  Json criterion_weights = Json::object();
  for (const auto& [id, weights] : report.criterion_weights)
    criterion_weights[id] = weights_to_json(weights);
  return Json{{"article_id", report.article_id},
              {"category_weights", weights_to_json(report.category_weights)},
              {"criterion_weights", criterion_weights},
              {"category_scores", report.category_scores},
              {"article_rating", report.article_rating},
              {"display_percentages", report.display_percentages},
              {"display", report.article_rating_display}};
}

Json ranking_to_json(const std::vector<evaluation::RankingEntry>& ranking) {
  Json out = Json::array();
  for (const auto& entry : ranking) out.push_back(ranking_entry_to_json(entry));
  return out;
}

Json sensitivity_to_json(const sensitivity::SensitivityReport& report) {
  Json reversals = Json::array();
  for (const auto& [a, b] : report.rank_reversals) reversals.push_back({a, b});
  return Json{{"baseline_ranking", ranking_to_json(report.baseline_ranking)},
              {"perturbed_ranking", ranking_to_json(report.perturbed_ranking)},
              {"rating_deltas", report.rating_deltas},
              {"rank_reversals", reversals}};
}

std::vector<sensitivity::WhatIfDelta> deltas_from_json(const Json& doc) {
  return guarded("what-if", [&] {
    std::vector<sensitivity::WhatIfDelta> out;
    for (const auto& d : doc) {
      out.push_back({d.at("target").get<std::string>(),
                     ImportanceRating(d.at("importance").get<int>())});
    }
    return out;
  });
}

Json violations_to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations)
    out.push_back({{"id", v.id}, {"message", v.message}});
  return out;
}

Json error_to_json(const Error& error) {
  Json detail = Json::object();
  if (!error.subject().empty()) detail["id"] = error.subject();
  if (error.step() != Step::None) detail["step"] = to_string(error.step());
  return Json{{"error",
               {{"code", to_string(error.code())},
                {"message", error.what()},
                {"detail", detail}}}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace rubric
