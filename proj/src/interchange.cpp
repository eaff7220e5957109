#include "rubric/interchange.hpp"

#include <set>

#include "rubric/csv.hpp"
#include "rubric/engine.hpp"
#include "rubric/error.hpp"
#include "rubric/evaluation.hpp"

namespace rubric::interchange {

std::string export_ratings(const CriteriaCatalog& catalog,
                           const WeightProfile& profile,
                           const std::vector<Assessment>& assessments,
                           const std::map<std::string, ArticleRecord>& articles) {
  csv::Row header = {"article_id", "title"};
  for (const auto& category : catalog.categories)
    header.push_back("cat_" + category.id + "_score");
  header.push_back("article_rating");
  header.push_back("rank");
  std::string out = csv::format_row(header);

  for (const auto& entry : evaluation::rank_articles(catalog, profile, assessments)) {
    auto article = articles.find(entry.article_id);
    if (article == articles.end()) {
      throw Error(ErrorCode::NotFound, "article " + entry.article_id + " not found",
                  entry.article_id);
    }
    csv::Row row = {entry.article_id, article->second.title};
    for (const auto& category : catalog.categories) {
      auto score = entry.category_scores.find(category.id);
      row.push_back(score == entry.category_scores.end()
                        ? std::string{}
                        : engine::format_percentage(score->second));
    }
    row.push_back(engine::format_percentage(entry.article_rating));
    row.push_back(std::to_string(entry.rank));
    out += csv::format_row(row);
  }
  return out;
}

std::string export_assessments(const CriteriaCatalog& catalog,
                               const WeightProfile& profile,
                               const std::vector<Assessment>& assessments) {
  const auto criteria = evaluation::effective_criteria(catalog, profile);
  csv::Row header = {"article_id"};
  header.insert(header.end(), criteria.begin(), criteria.end());
  std::string out = csv::format_row(header);
  for (const auto& assessment : assessments) {
    if (assessment.profile_ref != profile.ref()) {
      throw Error(ErrorCode::MixedProfile,
                  "assessment " + assessment.assessment_id +
                      " pins a different profile revision",
                  assessment.assessment_id);
    }
    csv::Row row = {assessment.article_ref};
    for (const auto& id : criteria) {
      auto it = assessment.scores.find(id);
      row.push_back(it == assessment.scores.end() ? std::string{}
                                                  : it->second.to_string());
    }
    out += csv::format_row(row);
  }
  return out;
}

std::vector<Assessment> import_assessment_csv(std::string_view document,
                                              const CriteriaCatalog& catalog,
                                              const WeightProfile& profile) {
  const auto rows = csv::parse(document);
  if (rows.empty() || rows.front().empty() || rows.front().front() != "article_id") {
    throw Error(ErrorCode::ParseError,
                "assessment CSV must start with an article_id header column");
  }
  const csv::Row& header = rows.front();
  std::set<std::string> seen_columns;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (!evaluation::is_effective(catalog, profile, header[c])) {
      throw Error(ErrorCode::UnknownColumn,
                  "column '" + header[c] + "' is not an effective criterion of "
                  "profile " + profile.profile_id,
                  header[c]);
    }
    if (!seen_columns.insert(header[c]).second) {
      throw Error(ErrorCode::UnknownColumn,
                  "column '" + header[c] + "' appears twice", header[c]);
    }
  }

  std::vector<Assessment> out;
  std::set<std::string> seen_articles;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    const std::string where = "row " + std::to_string(r + 1);
    if (row.size() != header.size()) {
      throw Error(ErrorCode::MalformedCell,
                  where + " has " + std::to_string(row.size()) + " fields, expected " +
                      std::to_string(header.size()));
    }
    if (row[0].empty()) {
      throw Error(ErrorCode::MalformedCell, where + ", column article_id: empty",
                  "article_id");
    }
    if (!seen_articles.insert(row[0]).second) {
      throw Error(ErrorCode::MalformedCell,
                  where + ": article " + row[0] + " appears twice", row[0]);
    }
    Assessment assessment = evaluation::make_assessment({}, row[0], profile);
    for (std::size_t c = 1; c < row.size(); ++c) {
      const std::string& cell = row[c];
      if (cell.empty()) continue;
      try {
        assessment.scores.insert_or_assign(header[c], CriterionScore::parse(cell));
      } catch (const Error&) {
        throw Error(ErrorCode::MalformedCell,
                    where + ", column " + header[c] + ": '" + cell +
                        "' is not 1..5, NA or empty",
                    header[c]);
      }
    }
    assessment.status = evaluation::compute_status(catalog, profile, assessment);
    out.push_back(std::move(assessment));
  }
  return out;
}

}  // namespace rubric::interchange
