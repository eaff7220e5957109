#include <doctest.h>

#include "rubric/csv.hpp"
#include "rubric/error.hpp"
#include "rubric/interchange.hpp"
#include "rubric/report.hpp"
#include "support.hpp"

using namespace rubric;

namespace {

ErrorCode import_error(std::string_view doc, std::string* message = nullptr) {
  const auto ex = report::worked_example();
  try {
    interchange::import_assessment_csv(doc, ex.catalog, ex.profile);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("expected an import error");
  return ErrorCode::BadRequest;
}

// Equality of everything an exchange document carries.
bool same_content(Assessment a, Assessment b) {
  a.updated_at.clear();
  b.updated_at.clear();
  return a == b;
}

}  // namespace

TEST_CASE("csv field quoting") {
  CHECK(csv::escape_field("plain") == "plain");
  CHECK(csv::escape_field("a,b") == "\"a,b\"");
  CHECK(csv::escape_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv::escape_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv::escape_field("") == "");
  CHECK(csv::format_row({"a", "b,c", ""}) == "a,\"b,c\",\r\n");
}

TEST_CASE("csv parsing") {
  const auto rows = csv::parse("h1,h2\r\n\"x, y\",\"q\"\"q\"\n\nlast,\"multi\nline\"\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == csv::Row{"h1", "h2"});
  CHECK(rows[1] == csv::Row{"x, y", "q\"q"});
  CHECK(rows[2] == csv::Row{"last", "multi\nline"});
  CHECK(csv::parse("a,,\n") == std::vector<csv::Row>{{"a", "", ""}});
  CHECK(csv::parse("").empty());
  CHECK_THROWS_AS(csv::parse("\"open\n"), Error);
  CHECK_THROWS_AS(csv::parse("ab\"c\n"), Error);
}

TEST_CASE("csv round-trips arbitrary fields") {
  const std::vector<csv::Row> rows{{"id", "title, with comma", "quote \" here"},
                                   {"x", "", "line\r\nbreak"}};
  std::string doc;
  for (const auto& r : rows) doc += csv::format_row(r);
  CHECK(csv::parse(doc) == rows);
}

TEST_CASE("ratings export of the fixture") {
  const auto ex = report::worked_example();
  const auto doc = interchange::export_ratings(ex.catalog, ex.profile, {ex.assessment},
                                               {{ex.article.article_id, ex.article}});
  const auto rows = csv::parse(doc);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].front() == "article_id");
  CHECK(rows[0][2] == "cat_1_score");
  CHECK(rows[0][12] == "cat_11_score");
  CHECK(rows[0][13] == "article_rating");
  CHECK(rows[0][14] == "rank");
  CHECK(rows[1][0] == "example-article");
  CHECK(rows[1][2] == "80.00%");
  CHECK(rows[1][3] == "66.67%");
  CHECK(rows[1][4] == "");
  CHECK(rows[1][13] == "75.56%");
  CHECK(rows[1][14] == "1");
  CHECK(doc.find("75.56%") != std::string::npos);
}

TEST_CASE("ratings export with no articles is header only") {
  const auto ex = report::worked_example();
  const auto doc = interchange::export_ratings(ex.catalog, ex.profile, {}, {});
  CHECK(csv::parse(doc).size() == 1);
  CHECK(doc.find("\r\n") == doc.size() - 2);
}

TEST_CASE("ratings export quotes titles with commas") {
  auto ex = report::worked_example();
  ex.article.title = "Security, management and \"practice\"";
  const auto doc = interchange::export_ratings(ex.catalog, ex.profile, {ex.assessment},
                                               {{ex.article.article_id, ex.article}});
  CHECK(doc.find("\"Security, management and \"\"practice\"\"\"") != std::string::npos);
  CHECK(csv::parse(doc)[1][1] == ex.article.title);
}

TEST_CASE("ratings export errors") {
  const auto ex = report::worked_example();
  auto draft = ex.assessment;
  draft.scores.erase("2.2");
  draft.status = AssessmentStatus::Draft;
  CHECK_THROWS_AS(interchange::export_ratings(ex.catalog, ex.profile, {draft},
                                              {{ex.article.article_id, ex.article}}),
                  Error);
  try {
    interchange::export_ratings(ex.catalog, ex.profile, {ex.assessment}, {});
    FAIL("expected not_found");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFound);
  }
}

TEST_CASE("fixture row imports as a complete assessment") {
  const auto ex = report::worked_example();
  const auto imported = interchange::import_assessment_csv(
      "article_id,1.1,2.1,2.2\na1,4,5,2\n", ex.catalog, ex.profile);
  REQUIRE(imported.size() == 1);
  const auto& a = imported[0];
  CHECK(a.article_ref == "a1");
  CHECK(a.assessment_id == "a1--worked-example-r1");
  CHECK(a.status == AssessmentStatus::Complete);
  CHECK(a.scores.at("1.1") == CriterionScore::of(4));
  CHECK(a.scores.at("2.2") == CriterionScore::of(2));
  CHECK(evaluation::rate(ex.catalog, ex.profile, a).article_rating_display == "75.56%");
}

TEST_CASE("import cells") {
  const auto ex = report::worked_example();
  const auto imported = interchange::import_assessment_csv(
      "article_id,2.2,1.1\r\nb,NA,\r\nc,,3\r\n", ex.catalog, ex.profile);
  REQUIRE(imported.size() == 2);
  CHECK(imported[0].scores.at("2.2").is_not_applicable());
  CHECK(imported[0].scores.count("1.1") == 0);
  CHECK(imported[0].status == AssessmentStatus::Draft);
  CHECK(imported[1].scores.size() == 1);
  CHECK(imported[1].status == AssessmentStatus::Draft);
}

TEST_CASE("import errors") {
  std::string message;
  CHECK(import_error("article_id,1.1,2.1,2.2\na1,6,5,2\n", &message) == ErrorCode::MalformedCell);
  CHECK(message.find("row 2") != std::string::npos);
  CHECK(message.find("1.1") != std::string::npos);
  CHECK(import_error("article_id,1.1\na1,0\n") == ErrorCode::MalformedCell);
  CHECK(import_error("article_id,1.1\na1,x\n") == ErrorCode::MalformedCell);
  CHECK(import_error("article_id,1.1\na1,4,5\n") == ErrorCode::MalformedCell);
  CHECK(import_error("article_id,1.1\n,4\n") == ErrorCode::MalformedCell);
  CHECK(import_error("article_id,1.1\na1,4\na1,5\n") == ErrorCode::MalformedCell);
  CHECK(import_error("article_id,2.3\na1,4\n", &message) == ErrorCode::UnknownColumn);
  CHECK(message.find("2.3") != std::string::npos);
  CHECK(import_error("article_id,9.9\na1,4\n") == ErrorCode::UnknownColumn);
  CHECK(import_error("article_id,1.1,1.1\na1,4,4\n") == ErrorCode::UnknownColumn);
  CHECK(import_error("id,1.1\na1,4\n") == ErrorCode::ParseError);
  CHECK(import_error("") == ErrorCode::ParseError);
}

TEST_CASE("assessment export and import round-trip") {
  testing::TwoArticles set;
  const auto& ex = set.fixture;
  auto draft = evaluation::make_assessment("", "draft-article", ex.profile);
  draft.scores.insert_or_assign("2.2", CriterionScore::not_applicable());
  draft.status = evaluation::compute_status(ex.catalog, ex.profile, draft);
  const std::vector<Assessment> originals{ex.assessment, set.top_assessment, draft};

  const auto doc = interchange::export_assessments(ex.catalog, ex.profile, originals);
  CHECK(csv::parse(doc)[0] == csv::Row{"article_id", "1.1", "2.1", "2.2"});
  const auto back = interchange::import_assessment_csv(doc, ex.catalog, ex.profile);
  REQUIRE(back.size() == originals.size());
  for (std::size_t i = 0; i < originals.size(); ++i) {
    INFO(originals[i].assessment_id);
    CHECK(same_content(back[i], originals[i]));
  }
  CHECK(interchange::export_assessments(ex.catalog, ex.profile, back) == doc);
}
