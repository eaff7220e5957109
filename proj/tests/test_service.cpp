#include <doctest.h>

#include <httplib.h>

#include <thread>

#include "rubric/codec.hpp"
#include "rubric/service.hpp"
#include "support.hpp"

using namespace rubric;


namespace {

// Service on an ephemeral port over a fresh store, stopped on scope exit.
class Running {
 public:
  Running() : store_(Store::init(dir_.path())), service_(Store::open(dir_.path())) {
    port_ = service_.bind("127.0.0.1", 0);
    thread_ = std::thread([this] { service_.listen(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    client_->set_connection_timeout(5);
  }
  ~Running() {
    service_.stop();
    thread_.join();
  }

  httplib::Client& http() { return *client_; }
  Store& store() { return store_; }

  Json post(const std::string& path, const Json& body, int expect) {
    auto res = client_->Post(path, body.dump(), "application/json");
    return check(res, expect, "POST " + path);
  }
  Json put(const std::string& path, const Json& body, int expect) {
    auto res = client_->Put(path, body.dump(), "application/json");
    return check(res, expect, "PUT " + path);
  }
  Json get(const std::string& path, int expect) {
    return check(client_->Get(path), expect, "GET " + path);
  }

  // Fixture profile, article and a complete assessment created over HTTP.
  void seed_fixture() {
    post("/api/profiles",
         {{"profile_id", "worked-example"},
          {"category_importance", {{"1", 4}, {"2", 2}}},
          {"criterion_importance", {{"1.1", 5}, {"2.1", 4}, {"2.2", 5}}}},
         201);
    post("/api/articles", {{"article_id", "example-article"}, {"title", "Example"}}, 201);
    post("/api/assessments",
         {{"assessment_id", "fx"},
          {"article_ref", "example-article"},
          {"profile_ref", {{"profile_id", "worked-example"}}},
          {"scores", {{"1.1", 4}, {"2.1", 5}, {"2.2", 2}}}},
         201);
  }

 private:
  static Json check(const httplib::Result& res, int expect, const std::string& what) {
    REQUIRE_MESSAGE(res, what << ": no response");
    INFO(what << " -> " << res->status << " " << res->body);
    CHECK(res->status == expect);
    if (res->body.empty() || res->get_header_value("Content-Type").find("json") ==
                                 std::string::npos)
      return Json{{"raw", res->body}};
    return Json::parse(res->body);
  }

  testing::TempDir dir_;
  Store store_;
  Service service_;
  int port_ = 0;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

}  // namespace

TEST_CASE("status mapping") {
  CHECK(http_status(ErrorCode::ValidationError) == 422);
  CHECK(http_status(ErrorCode::AllZeroImportance) == 422);
  CHECK(http_status(ErrorCode::IncompleteAssessment) == 422);
  CHECK(http_status(ErrorCode::Conflict) == 409);
  CHECK(http_status(ErrorCode::NotFound) == 404);
  CHECK(http_status(ErrorCode::ParseError) == 400);
  CHECK(http_status(ErrorCode::BadRequest) == 400);
  CHECK(http_status(ErrorCode::IoError) == 500);
}

TEST_CASE("service: catalogs and meta") {
  Running s;
  const auto catalog = s.get("/api/catalogs/builtin", 200);
  CHECK(catalog.at("categories").size() == 11);
  CHECK(s.get("/api/catalogs", 200).at("catalogs").size() == 1);
  s.get("/api/catalogs/none", 404);
  const auto meta = s.get("/api/meta", 200);
  CHECK(meta.contains("error_codes"));

  auto res = s.http().Get("/api/catalogs");
  REQUIRE(res);
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
  auto pre = s.http().Options("/api/profiles");
  REQUIRE(pre);
  CHECK(pre->status == 204);
}

TEST_CASE("service: all-zero profile is rejected with a step tag") {
  Running s;
  const auto err = s.post("/api/profiles", {{"profile_id", "empty"}}, 422);
  CHECK(err.at("error").at("code") == "all_zero_importance");
  CHECK(err.at("error").at("detail").at("step") == "category_weights");
  s.get("/api/profiles/empty", 404);
}

TEST_CASE("service: fixture rating over HTTP") {
  Running s;
  s.seed_fixture();
  const auto rating = s.get("/api/assessments/fx/rating", 200);
  CHECK(rating.at("article_rating").get<double>() == doctest::Approx(34.0 / 45.0).epsilon(1e-12));
  CHECK(rating.at("display") == "75.56%");
  CHECK(rating.at("display_percentages").at("1") == "80.00%");
  CHECK(rating.at("display_percentages").at("2") == "66.67%");

  const auto weights = s.get("/api/profiles/worked-example/weights", 200);
  CHECK(weights.at("category_weights").at("1").at("display") == "66.67%");
  CHECK(weights.at("criterion_weights").at("2").at("2.2").at("display") == "55.56%");

  const auto preview = s.post("/api/weights",
                              {{"category_importance", {{"1", 1}, {"2", 3}}},
                               {"criterion_importance", {{"1.1", 2}, {"2.1", 1}}}},
                              200);
  CHECK(preview.at("category_weights").at("2").at("display") == "75.00%");
}

TEST_CASE("service: rating responses are byte-identical and GETs are side-effect free") {
  Running s;
  s.seed_fixture();
  const auto before = s.store().content_digest();
  auto first = s.http().Get("/api/assessments/fx/rating");
  auto second = s.http().Get("/api/assessments/fx/rating");
  REQUIRE(first);
  REQUIRE(second);
  CHECK(first->body == second->body);
  for (const char* path :
       {"/api/catalogs", "/api/profiles", "/api/profiles/worked-example",
        "/api/profiles/worked-example/weights", "/api/articles", "/api/assessments",
        "/api/assessments/fx", "/api/rankings?profile=worked-example",
        "/api/rankings.csv?profile=worked-example", "/api/assessments.csv?profile=worked-example",
        "/api/stability?profile=worked-example", "/api/meta"}) {
    auto res = s.http().Get(path);
    REQUIRE(res);
    CHECK_MESSAGE(res->status == 200, path);
  }
  s.post("/api/whatif", {{"profile_id", "worked-example"}, {"deltas", {{{"target", "1"}, {"importance", 2}}}}},
         200);
  CHECK(s.store().content_digest() == before);
}

TEST_CASE("service: revisions and conflicts") {
  Running s;
  s.seed_fixture();
  const auto r2 = s.post("/api/profiles/worked-example/importance",
                         {{"target", "1"}, {"importance", 3}, {"revision", 1}}, 200);
  CHECK(r2.at("revision") == 2);
  const auto stale = s.post("/api/profiles/worked-example/importance",
                            {{"target", "1"}, {"importance", 2}, {"revision", 1}}, 409);
  CHECK(stale.at("error").at("code") == "conflict");

  auto profile = s.get("/api/profiles/worked-example", 200);
  CHECK(profile.at("revision") == 2);
  CHECK(s.get("/api/profiles/worked-example?revision=1", 200).at("category_importance").at("1") ==
        4);
  s.put("/api/profiles/worked-example", profile, 409);
  profile["revision"] = 3;
  profile["name"] = "renamed";
  CHECK(s.put("/api/profiles/worked-example", profile, 200).at("revision") == 3);

  const auto scored =
      s.post("/api/assessments/fx/scores", {{"criterion", "2.2"}, {"score", "NA"}, {"revision", 1}},
             200);
  CHECK(scored.at("revision") == 2);
  CHECK(scored.at("scores").at("2.2") == "NA");
  s.post("/api/assessments/fx/scores", {{"criterion", "2.2"}, {"score", 3}, {"revision", 1}}, 409);
  const auto err = s.post("/api/assessments/fx/scores",
                          {{"criterion", "2.3"}, {"score", 3}, {"revision", 2}}, 422);
  CHECK(err.at("error").at("code") == "ineffective_criterion");
  s.post("/api/assessments/fx/scores", {{"criterion", "1.1"}, {"score", 6}, {"revision", 2}}, 422);
  const auto cleared = s.post("/api/assessments/fx/scores",
                              {{"criterion", "1.1"}, {"score", nullptr}, {"revision", 2}}, 200);
  CHECK(cleared.at("status") == "draft");
  const auto incomplete = s.get("/api/assessments/fx/rating", 422);
  CHECK(incomplete.at("error").at("code") == "incomplete_assessment");
}

TEST_CASE("service: errors") {
  Running s;
  s.seed_fixture();
  auto bad = s.http().Post("/api/articles", "{ nope", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  s.post("/api/profiles/worked-example/importance", {{"importance", 3}, {"revision", 1}}, 400);
  s.get("/api/rankings", 400);
  s.get("/api/assessments/missing", 404);
  const auto ref = s.http().Delete("/api/articles/example-article");
  REQUIRE(ref);
  CHECK(ref->status == 422);
  s.post("/api/whatif",
         {{"profile_id", "worked-example"},
          {"deltas", {{{"target", "1"}, {"importance", 0}}, {{"target", "2"}, {"importance", 0}}}}},
         422);
}

TEST_CASE("service: rankings, what-if and CSV") {
  Running s;
  s.seed_fixture();
  s.post("/api/articles", {{"article_id", "all-fives"}, {"title", "Fives, all of them"}}, 201);
  s.post("/api/assessments",
         {{"article_ref", "all-fives"},
          {"profile_ref", {{"profile_id", "worked-example"}, {"revision", 1}}},
          {"scores", {{"1.1", 5}, {"2.1", 5}, {"2.2", 5}}}},
         201);
  s.post("/api/articles", {{"article_id", "draft"}, {"title", "Draft"}}, 201);
  s.post("/api/assessments",
         {{"article_ref", "draft"}, {"profile_ref", {{"profile_id", "worked-example"}}}}, 201);

  const auto ranking = s.get("/api/rankings?profile=worked-example", 200);
  REQUIRE(ranking.at("ranking").size() == 2);
  CHECK(ranking.at("ranking")[0].at("article_id") == "all-fives");
  CHECK(ranking.at("ranking")[1].at("article_id") == "example-article");
  CHECK(ranking.at("skipped_drafts") == Json::array({"draft--worked-example-r1"}));

  auto csv = s.http().Get("/api/rankings.csv?profile=worked-example");
  REQUIRE(csv);
  CHECK(csv->body.find("75.56%") != std::string::npos);
  CHECK(csv->body.find("\"Fives, all of them\"") != std::string::npos);

  auto exported = s.http().Get("/api/assessments.csv?profile=worked-example");
  REQUIRE(exported);
  const auto before = s.get("/api/assessments/fx", 200);
  auto imported = s.http().Post("/api/assessments.csv?profile=worked-example", exported->body,
                                "text/csv");
  REQUIRE(imported);
  CHECK(imported->status == 200);
  auto after = s.get("/api/assessments/fx", 200);
  CHECK(after.at("scores") == before.at("scores"));
  CHECK(after.at("revision") == 2);

  auto bad = s.http().Post("/api/assessments.csv?profile=worked-example",
                           "article_id,2.3\nx,1\n", "text/csv");
  REQUIRE(bad);
  CHECK(bad->status == 422);
  CHECK(Json::parse(bad->body).at("error").at("code") == "unknown_column");

  const auto whatif = s.post(
      "/api/whatif",
      {{"profile_id", "worked-example"}, {"deltas", {{{"target", "1"}, {"importance", 2}}}}}, 200);
  CHECK(whatif.at("rank_reversals").empty());
  const auto stability = s.get("/api/stability?profile=worked-example", 200);
  CHECK(stability.at("reversal_flags").size() == 14);
}
