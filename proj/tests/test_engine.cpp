#include <doctest.h>

#include "checks.hpp"
#include "rubric/engine.hpp"
#include "rubric/error.hpp"
#include "rubric/evaluation.hpp"
#include "rubric/report.hpp"

using namespace rubric;
using engine::format_percentage;

namespace {

void expect_ok(const checks::Outcome& outcome) {
  INFO(outcome.summary());
  CHECK(outcome.cases > 0);
  CHECK(outcome.ok());
}

ImportanceMap importances(std::initializer_list<std::pair<const char*, int>> entries) {
  ImportanceMap map;
  for (const auto& [id, v] : entries) map[id] = ImportanceRating(v);
  return map;
}

Error evaluate_error(const CriteriaCatalog& c, const WeightProfile& p, const Assessment& a) {
  try {
    engine::evaluate(c, p, a);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an engine error");
  return Error(ErrorCode::BadRequest, "unreachable");
}

}  // namespace

TEST_CASE("worked example matches every displayed value") { expect_ok(checks::golden_example()); }

TEST_CASE("normalize examples") {
  const auto w = engine::normalize(importances({{"1", 4}, {"2", 2}, {"3", 0}}));
  CHECK(w.at("1") == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(w.at("2") == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(w.at("3") == 0.0);
  CHECK(w.weights.size() == 3);

  const auto c = engine::normalize(importances({{"2.1", 4}, {"2.2", 5}, {"2.3", 0}}));
  CHECK(c.at("2.1") == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(c.at("2.2") == doctest::Approx(5.0 / 9.0).epsilon(1e-12));

  CHECK(engine::normalize(importances({{"x", 3}})).at("x") == 1.0);

  try {
    engine::normalize(importances({{"a", 0}, {"b", 0}}));
    FAIL("expected all_zero_importance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllZeroImportance);
  }
  CHECK_THROWS_AS(engine::normalize({}), Error);
}

TEST_CASE("category score examples") {
  engine::NormalizedWeights w1{{{"1.1", 1.0}}};
  CHECK(engine::category_score({{"1.1", CriterionScore::of(4)}}, w1) ==
        doctest::Approx(0.8).epsilon(1e-12));

  engine::NormalizedWeights w2{{{"2.1", 4.0 / 9.0}, {"2.2", 5.0 / 9.0}, {"2.3", 0.0}}};
  CHECK(engine::category_score({{"2.1", CriterionScore::of(5)}, {"2.2", CriterionScore::of(2)}},
                               w2) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  engine::NormalizedWeights w3{{{"a", 0.25}, {"b", 0.75}}};
  CHECK(engine::category_score({{"a", CriterionScore::of(5)}, {"b", CriterionScore::of(5)}}, w3) ==
        doctest::Approx(1.0).epsilon(1e-12));

  try {
    engine::category_score({{"2.1", CriterionScore::of(5)}}, w2);
    FAIL("expected missing_score");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingScore);
    CHECK(e.subject() == "2.2");
  }
}

TEST_CASE("article rating examples") {
  engine::NormalizedWeights w{{{"1", 2.0 / 3.0}, {"2", 1.0 / 3.0}}};
  CHECK(engine::article_rating({{"1", 0.8}, {"2", 2.0 / 3.0}}, w) ==
        doctest::Approx(34.0 / 45.0).epsilon(1e-12));
  CHECK(engine::article_rating({{"x", 0.42}}, engine::NormalizedWeights{{{"x", 1.0}}}) ==
        doctest::Approx(0.42).epsilon(1e-12));
  CHECK(engine::article_rating({{"1", 0.6}, {"2", 0.6}}, w) == doctest::Approx(0.6).epsilon(1e-12));
  try {
    engine::article_rating({{"1", 0.8}}, w);
    FAIL("expected missing_category_score");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingCategoryScore);
    CHECK(e.subject() == "2");
  }
}

TEST_CASE("evaluate maximal case") {
  const auto& catalog = builtin_catalog();
  auto p = evaluation::make_profile("max", "", catalog);
  auto a = evaluation::make_assessment("", "art", p);
  for (auto& [id, v] : p.category_importance) v = ImportanceRating(5);
  for (auto& [id, v] : p.criterion_importance) {
    v = ImportanceRating(5);
    a.scores.insert_or_assign(id, CriterionScore::of(5));
  }
  const auto r = engine::evaluate(catalog, p, a);
  CHECK(r.article_rating == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.article_rating_display == "100.00%");
  CHECK(r.category_scores.size() == 11);
}

TEST_CASE("evaluate errors carry their step") {
  auto ex = report::worked_example();

  SUBCASE("all categories zero") {
    auto p = ex.profile;
    for (auto& [id, v] : p.category_importance) v = ImportanceRating(0);
    const auto e = evaluate_error(ex.catalog, p, ex.assessment);
    CHECK(e.code() == ErrorCode::AllZeroImportance);
    CHECK(e.step() == Step::CategoryWeights);
  }
  SUBCASE("selected category with no weighted criterion") {
    auto p = ex.profile;
    p.category_importance["3"] = ImportanceRating(1);
    const auto e = evaluate_error(ex.catalog, p, ex.assessment);
    CHECK(e.code() == ErrorCode::AllZeroImportance);
    CHECK(e.step() == Step::CriterionWeights);
    CHECK(e.subject() == "3");
  }
  SUBCASE("every weighted criterion not applicable") {
    auto a = ex.assessment;
    a.scores.insert_or_assign("1.1", CriterionScore::not_applicable());
    const auto e = evaluate_error(ex.catalog, ex.profile, a);
    CHECK(e.code() == ErrorCode::AllZeroImportance);
    CHECK(e.step() == Step::CriterionWeights);
    CHECK(e.subject() == "1");
  }
  SUBCASE("missing score") {
    auto a = ex.assessment;
    a.scores.erase("2.2");
    const auto e = evaluate_error(ex.catalog, ex.profile, a);
    CHECK(e.code() == ErrorCode::MissingScore);
    CHECK(e.step() == Step::CategoryScore);
    CHECK(e.subject() == "2.2");
  }
}

TEST_CASE("not applicable renormalizes within the category") {
  auto ex = report::worked_example();
  ex.assessment.scores.insert_or_assign("2.2", CriterionScore::not_applicable());
  const auto r = engine::evaluate(ex.catalog, ex.profile, ex.assessment);
  CHECK(r.criterion_weights.at("2").at("2.1") == 1.0);
  CHECK(r.criterion_weights.at("2").at("2.2") == 0.0);
  CHECK(r.category_scores.at("2") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.article_rating == doctest::Approx(0.8 * 2.0 / 3.0 + 1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("evaluate is deterministic") {
  const auto ex = report::worked_example();
  CHECK(engine::evaluate(ex.catalog, ex.profile, ex.assessment) ==
        engine::evaluate(ex.catalog, ex.profile, ex.assessment));
}

TEST_CASE("percentage display rounds half away from zero") {
  CHECK(format_percentage(2.0 / 3.0) == "66.67%");
  CHECK(format_percentage(1.0 / 3.0) == "33.33%");
  CHECK(format_percentage(4.0 / 9.0) == "44.44%");
  CHECK(format_percentage(5.0 / 9.0) == "55.56%");
  CHECK(format_percentage(34.0 / 45.0) == "75.56%");
  CHECK(format_percentage(0.8) == "80.00%");
  CHECK(format_percentage(1.0) == "100.00%");
  CHECK(format_percentage(0.0) == "0.00%");
  CHECK(format_percentage(0.12345) == "12.35%");
  CHECK(format_percentage(0.00005) == "0.01%");
  CHECK(format_percentage(0.00004) == "0.00%");
  CHECK(format_percentage(-0.00005) == "-0.01%");
  CHECK(format_percentage(-0.00004) == "0.00%");
  CHECK(format_percentage(-0.25) == "-25.00%");
  CHECK(format_percentage(0.001249) == "0.12%");
}

TEST_CASE("engine matches the brute-force oracle") {
  expect_ok(checks::oracle_equivalence(100, 20150101));
  expect_ok(checks::oracle_equivalence(100, 7, 0.25));
}

TEST_CASE("oracle reproduces the worked example by itself") {
  // Categories 1 and 2 of the fixture; criteria in catalog order.
  oracle::Instance in;
  in.category_importance = {4, 2};
  in.criterion_importance = {{5, 0}, {4, 5, 0}};
  in.score = {{4, 1}, {5, 2, 1}};
  CHECK(oracle::rating(in) == doctest::Approx(34.0 / 45.0).epsilon(1e-12));
  CHECK(oracle::category_score(in, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("property: normalization") { expect_ok(checks::property_normalization(300, 11)); }
TEST_CASE("property: bounds") { expect_ok(checks::property_bounds(300, 12)); }
TEST_CASE("property: monotonic sensitivity") { expect_ok(checks::property_monotonic(300, 13)); }
TEST_CASE("property: uniform scale invariance") { expect_ok(checks::property_scale(200, 14)); }
TEST_CASE("property: exclusion equivalence") { expect_ok(checks::property_exclusion(300, 15)); }
TEST_CASE("property: not-applicable renormalization") {
  expect_ok(checks::property_not_applicable(300, 16));
}
