#include "rubric/report.hpp"

#include <cstdio>
#include <sstream>

namespace rubric::report {
namespace {

using engine::format_percentage;

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string rpad(std::string text, std::size_t width) {
  if (text.size() < width) text.insert(0, width - text.size(), ' ');
  return text;
}

std::string importance_cell(ImportanceRating rating) {
  return std::to_string(rating.value()) + "  " +
         std::string(importance_label(rating.value()));
}

std::string score_cell(const Assessment& assessment, const std::string& id) {
  auto it = assessment.scores.find(id);
  if (it == assessment.scores.end()) return "-";
  if (it->second.is_not_applicable()) return "NA  Not Applicable";
  return std::to_string(it->second.value()) + "  " +
         std::string(score_label(it->second.value()));
}

}  // namespace

WorkedExample worked_example() {
  WorkedExample ex;
  ex.catalog = builtin_catalog();

  WeightProfile& p = ex.profile;
  p.profile_id = "worked-example";
  p.name = "Two-category teaching program";
  p.catalog_ref = ex.catalog.ref();
  for (const auto& category : ex.catalog.categories) {
    p.category_importance[category.id] = ImportanceRating{};
    for (const auto& criterion : category.criteria)
      p.criterion_importance[criterion.id] = ImportanceRating{};
  }
  p.category_importance["1"] = ImportanceRating(4);
  p.category_importance["2"] = ImportanceRating(2);
  p.criterion_importance["1.1"] = ImportanceRating(5);
  p.criterion_importance["2.1"] = ImportanceRating(4);
  p.criterion_importance["2.2"] = ImportanceRating(5);
  p.created_at = "2015-01-01T00:00:00Z";
  p.updated_at = p.created_at;
  p.revision = 1;

  ex.article.article_id = "example-article";
  ex.article.title = "Example article";

  Assessment& a = ex.assessment;
  a.assessment_id = evaluation::default_assessment_id(ex.article.article_id, p.ref());
  a.article_ref = ex.article.article_id;
  a.profile_ref = p.ref();
  a.scores.insert_or_assign("1.1", CriterionScore::of(4));
  a.scores.insert_or_assign("2.1", CriterionScore::of(5));
  a.scores.insert_or_assign("2.2", CriterionScore::of(2));
  a.status = AssessmentStatus::Complete;
  a.updated_at = p.created_at;
  return ex;
}

std::string render_walkthrough(const CriteriaCatalog& catalog,
                               const WeightProfile& profile,
                               const Assessment& assessment) {
  const auto report = evaluation::rate(catalog, profile, assessment);
  std::ostringstream out;
  out << "Article evaluation: " << assessment.article_ref << " under profile "
      << profile.profile_id << " r" << profile.revision << " (catalog "
      << catalog.catalog_id << "@" << catalog.version << ")\n\n";

  int category_total = 0;
  out << "Step 1: category importance\n";
  for (const auto& category : catalog.categories) {
    const auto rating = profile.category(category.id);
    category_total += rating.value();
    out << "  " << pad(category.id, 4) << pad(category.name, 30)
        << importance_cell(rating) << "\n";
  }
  out << "  " << pad("", 4) << pad("Total", 30) << category_total << "\n\n";

  out << "Step 2: normalised category weight = importance / " << category_total << "\n";
  for (const auto& category : catalog.categories) {
    const double w = report.category_weights.at(category.id);
    out << "  " << pad(category.id, 4) << pad(category.name, 30)
        << (w > 0.0 ? rpad(format_percentage(w), 8) : rpad("-", 8)) << "\n";
  }
  out << "  " << pad("", 4) << pad("Total", 30) << rpad(format_percentage(1.0), 8)
      << "\n\n";

  out << "Step 3: criterion importance (selected categories)\n";
  for (const auto& category : catalog.categories) {
    if (profile.category(category.id).excluded()) continue;
    int total = 0;
    for (const auto& criterion : category.criteria) {
      const auto rating = profile.criterion(criterion.id);
      total += rating.value();
      out << "  " << pad(criterion.id, 6) << importance_cell(rating) << "\n";
    }
    out << "  " << pad("", 6) << "Total for " << category.name << ": " << total << "\n";
  }
  out << "\n";

  out << "Step 4: normalised criterion weight = importance / category total\n";
  for (const auto& category : catalog.categories) {
    if (profile.category(category.id).excluded()) continue;
    const auto& weights = report.criterion_weights.at(category.id);
    for (const auto& criterion : category.criteria) {
      out << "  " << pad(criterion.id, 6)
          << rpad(format_percentage(weights.at(criterion.id)), 8) << "\n";
    }
  }
  out << "\n";

  out << "Step 5: criterion scores (effective criteria)\n";
  for (const auto& id : evaluation::effective_criteria(catalog, profile)) {
    out << "  " << pad(id, 6) << score_cell(assessment, id) << "\n";
  }
  out << "\n";

  out << "Step 6: category score = sum(score x weight) / 5\n";
  for (const auto& category : catalog.categories) {
    auto it = report.category_scores.find(category.id);
    if (it == report.category_scores.end()) continue;
    const auto& weights = report.criterion_weights.at(category.id);
    std::string terms;
    for (const auto& criterion : category.criteria) {
      const double w = weights.at(criterion.id);
      if (w <= 0.0) continue;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s%d x %.4f", terms.empty() ? "" : " + ",
                    assessment.scores.at(criterion.id).value(), w);
      terms += buf;
    }
    out << "  " << pad(category.id, 4) << pad(category.name, 30)
        << rpad(format_percentage(it->second), 8) << "   (" << terms << ") / 5\n";
  }
  out << "\n";

  out << "Step 7: article rating = sum(category score x category weight)\n";
  std::string terms;
  for (const auto& [id, score] : report.category_scores) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.4f x %.4f", terms.empty() ? "" : " + ", score,
                  report.category_weights.at(id));
    terms += buf;
  }
  out << "  " << terms << "\n";
  out << "  Article rating: " << report.article_rating_display << "\n";
  return out.str();
}

std::string render_catalog(const CriteriaCatalog& catalog) {
  std::ostringstream out;
  out << "Catalog " << catalog.catalog_id << "@" << catalog.version << ": "
      << catalog.categories.size() << " categories, " << catalog.criterion_count()
      << " criteria\n";
  for (const auto& category : catalog.categories) {
    out << "\n" << category.id << ". " << category.name << "\n";
    for (const auto& criterion : category.criteria)
      out << "  " << pad(criterion.id, 6) << criterion.prompt << "\n";
  }
  return out.str();
}

std::string render_profile(const CriteriaCatalog& catalog, const WeightProfile& profile) {
  std::ostringstream out;
  out << "Profile " << profile.profile_id << " r" << profile.revision;
  if (!profile.name.empty()) out << " \"" << profile.name << "\"";
  out << " (catalog " << profile.catalog_ref.catalog_id << "@"
      << profile.catalog_ref.version << ")\n";
  for (const auto& category : catalog.categories) {
    const auto rating = profile.category(category.id);
    out << "  " << pad(category.id, 6) << pad(category.name, 30) << importance_cell(rating)
        << "\n";
    if (rating.excluded()) continue;
    for (const auto& criterion : category.criteria)
      out << "    " << pad(criterion.id, 32) << importance_cell(profile.criterion(criterion.id))
          << "\n";
  }
  return out.str();
}

std::string render_rating(const CriteriaCatalog& catalog, const engine::RatingReport& report) {
  std::ostringstream out;
  out << "Rating for " << report.article_id << "\n";
  for (const auto& category : catalog.categories) {
    auto it = report.display_percentages.find(category.id);
    if (it == report.display_percentages.end()) continue;
    out << "  " << pad(category.id, 4) << pad(category.name, 30) << "weight "
        << rpad(format_percentage(report.category_weights.at(category.id)), 8)
        << "  score " << rpad(it->second, 8) << "\n";
  }
  out << "  Article rating: " << report.article_rating_display << "\n";
  return out.str();
}

std::string render_ranking(const std::vector<evaluation::RankingEntry>& ranking) {
  std::ostringstream out;
  out << pad("rank", 6) << pad("article", 32) << "rating\n";
  for (const auto& entry : ranking) {
    out << pad(std::to_string(entry.rank), 6) << pad(entry.article_id, 32)
        << rpad(format_percentage(entry.article_rating), 8) << "\n";
  }
  return out.str();
}

std::string render_sensitivity(const sensitivity::SensitivityReport& report) {
  std::map<std::string, int> baseline_rank;
  for (const auto& e : report.baseline_ranking) baseline_rank[e.article_id] = e.rank;
  std::ostringstream out;
  out << pad("rank", 6) << pad("was", 5) << pad("article", 32) << pad("rating", 10)
      << "change\n";
  for (const auto& e : report.perturbed_ranking) {
    const double delta = report.rating_deltas.at(e.article_id);
    std::string change = format_percentage(delta);
    if (delta >= 0.0 && change.front() != '-') change.insert(0, "+");
    out << pad(std::to_string(e.rank), 6) << pad(std::to_string(baseline_rank[e.article_id]), 5)
        << pad(e.article_id, 32) << pad(format_percentage(e.article_rating), 10) << change
        << "\n";
  }
  if (report.rank_reversals.empty()) {
    out << "No rank reversals.\n";
  } else {
    out << "Rank reversals:\n";
    for (const auto& [a, b] : report.rank_reversals) out << "  " << a << " <-> " << b << "\n";
  }
  return out.str();
}

}  // namespace rubric::report
