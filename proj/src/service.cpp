#include "rubric/service.hpp"

#include <httplib.h>
#include <signal.h>

#include <iostream>
#include <thread>

#include "rubric/codec.hpp"
#include "rubric/engine.hpp"
#include "rubric/evaluation.hpp"
#include "rubric/interchange.hpp"
#include "rubric/sensitivity.hpp"

namespace rubric {

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound: return 404;
    case ErrorCode::Conflict: return 409;
    case ErrorCode::ParseError:
    case ErrorCode::BadRequest:
    case ErrorCode::UnsupportedSchema: return 400;
    case ErrorCode::IoError: return 500;
    default: return 422;
  }
}

namespace {

using httplib::Request;
using httplib::Response;

void send_json(Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(2), "application/json");
}

void send_error(Response& res, const Error& error) {
  send_json(res, http_status(error.code()), error_to_json(error));
}

Json body_json(const Request& req) { return parse_json(req.body); }

std::string required_param(const Request& req, const char* name) {
  if (!req.has_param(name) || req.get_param_value(name).empty()) {
    throw Error(ErrorCode::BadRequest,
                std::string("missing query parameter '") + name + "'", name);
  }
  return req.get_param_value(name);
}

std::optional<std::int64_t> revision_param(const Request& req) {
  if (!req.has_param("revision")) return std::nullopt;
  const auto text = req.get_param_value("revision");
  try {
    std::size_t used = 0;
    const auto value = std::stoll(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::BadRequest, "revision must be an integer", "revision");
}

std::int64_t body_revision(const Json& body) {
  auto it = body.find("revision");
  if (it == body.end() || !it->is_number_integer()) {
    throw Error(ErrorCode::BadRequest,
                "request must carry the integer revision it is based on",
                "revision");
  }
  return it->get<std::int64_t>();
}

// Profile writes through the service must stay evaluable at the category
// level; the step tag points the client at the failing computation.
void require_selected_category(const CriteriaCatalog& catalog,
                               const WeightProfile& profile) {
  ImportanceMap importances;
  for (const auto& category : catalog.categories)
    importances[category.id] = profile.category(category.id);
  try {
    engine::normalize(importances);
  } catch (const Error& e) {
    throw e.with_step(Step::CategoryWeights);
  }
}

Json profile_weights(const CriteriaCatalog& catalog, const WeightProfile& profile) {
  require_selected_category(catalog, profile);
  ImportanceMap category_importance;
  for (const auto& category : catalog.categories)
    category_importance[category.id] = profile.category(category.id);
  const auto category_weights = engine::normalize(category_importance);

  Json criterion_weights = Json::object();
  for (const auto& category : catalog.categories) {
    ImportanceMap importances;
    for (const auto& criterion : category.criteria)
      importances[criterion.id] = category_weights.at(category.id) > 0.0
                                      ? profile.criterion(criterion.id)
                                      : ImportanceRating{};
    engine::NormalizedWeights weights;
    try {
      weights = engine::normalize(importances);
    } catch (const Error&) {
      for (const auto& criterion : category.criteria)
        weights.weights[criterion.id] = 0.0;
    }
    criterion_weights[category.id] = weights_to_json(weights);
  }
  return Json{{"profile_id", profile.profile_id},
              {"revision", profile.revision},
              {"category_weights", weights_to_json(category_weights)},
              {"criterion_weights", criterion_weights},
              {"violations",
               violations_to_json(evaluation::validate_profile(catalog, profile))}};
}

}  // namespace

struct Service::Impl {
  Store store;
  std::string cors_origin;
  httplib::Server server;

  Impl(Store s, std::string origin) : store(std::move(s)), cors_origin(std::move(origin)) {
    routes();
  }

  // Wraps a handler so domain errors become structured error responses.
  template <typename F>
  httplib::Server::Handler guard(F f) {
    return [f = std::move(f)](const Request& req, Response& res) {
      try {
        f(req, res);
      } catch (const Error& e) {
        send_error(res, e);
      } catch (const nlohmann::json::exception& e) {
        send_error(res, Error(ErrorCode::BadRequest, e.what()));
      } catch (const std::exception& e) {
        send_error(res, Error(ErrorCode::IoError, e.what()));
      }
    };
  }

  WeightProfile profile_at(const std::string& id, std::optional<std::int64_t> rev) {
    return store.get_profile(id, rev);
  }

  std::vector<Assessment> complete_assessments(const WeightProfile& profile,
                                               std::vector<std::string>* skipped) {
    std::vector<Assessment> out;
    for (auto& assessment : store.list_assessments(profile.ref())) {
      if (assessment.status == AssessmentStatus::Complete) {
        out.push_back(std::move(assessment));
      } else if (skipped) {
        skipped->push_back(assessment.assessment_id);
      }
    }
    return out;
  }

  void routes() {
    server.set_post_routing_handler([this](const Request&, Response& res) {
      res.set_header("Access-Control-Allow-Origin", cors_origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, DELETE, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    server.Options(R"(/api/.*)", [](const Request&, Response& res) { res.status = 204; });

    server.Get("/api/meta", guard([](const Request&, Response& res) {
      Json codes = Json::array();
      for (auto code : all_error_codes()) codes.push_back(to_string(code));
      Json importance = Json::object();
      Json score = Json::object();
      for (int i = 0; i <= 5; ++i) importance[std::to_string(i)] = importance_label(i);
      for (int i = 1; i <= 5; ++i) score[std::to_string(i)] = score_label(i);
      send_json(res, 200,
                {{"schema_version", kSchemaVersion},
                 {"error_codes", codes},
                 {"importance_labels", importance},
                 {"score_labels", score}});
    }));

    catalog_routes();
    profile_routes();
    article_routes();
    assessment_routes();
    analysis_routes();
  }

  void catalog_routes() {
    server.Get("/api/catalogs", guard([this](const Request&, Response& res) {
      Json list = Json::array();
      for (const auto& ref : store.list_catalogs())
        list.push_back({{"catalog_id", ref.catalog_id}, {"version", ref.version}});
      send_json(res, 200, {{"catalogs", list}});
    }));
    server.Post("/api/catalogs", guard([this](const Request& req, Response& res) {
      const auto catalog = load_catalog(req.body);
      store.put_catalog(catalog);
      send_json(res, 201, catalog_to_json(catalog));
    }));
    server.Get(R"(/api/catalogs/([^/]+))", guard([this](const Request& req, Response& res) {
      const std::string id = req.matches[1];
      const auto catalog = req.has_param("version")
                               ? store.get_catalog(CatalogRef{id, req.get_param_value("version")})
                               : store.get_catalog(id);
      send_json(res, 200, catalog_to_json(catalog));
    }));
  }

  void profile_routes() {
    server.Get("/api/profiles", guard([this](const Request&, Response& res) {
      Json list = Json::array();
      for (const auto& p : store.list_profiles()) list.push_back(profile_to_json(p));
      send_json(res, 200, {{"profiles", list}});
    }));
    server.Post("/api/profiles", guard([this](const Request& req, Response& res) {
      Json body = body_json(req);
      if (!body.contains("catalog_ref")) {
        const auto catalog = store.get_catalog(std::string(kBuiltinCatalogId));
        body["catalog_ref"] = {{"catalog_id", catalog.catalog_id},
                               {"version", catalog.version}};
      }
      WeightProfile profile = profile_from_json(body);
      profile.revision = 1;
      profile.created_at = now_rfc3339();
      profile.updated_at = profile.created_at;
      require_selected_category(store.catalog_for(profile), profile);
      store.put_profile(profile);
      send_json(res, 201, profile_to_json(profile));
    }));
    server.Get(R"(/api/profiles/([^/]+))", guard([this](const Request& req, Response& res) {
      send_json(res, 200, profile_to_json(profile_at(req.matches[1], revision_param(req))));
    }));
    server.Put(R"(/api/profiles/([^/]+))", guard([this](const Request& req, Response& res) {
      const std::string id = req.matches[1];
      WeightProfile profile = profile_from_json(body_json(req));
      if (profile.profile_id != id) {
        throw Error(ErrorCode::BadRequest, "profile_id does not match the URL", id);
      }
      const auto current = store.get_profile(id);
      profile.created_at = current.created_at;
      profile.updated_at = now_rfc3339();
      require_selected_category(store.catalog_for(profile), profile);
      store.put_profile(profile);
      send_json(res, 200, profile_to_json(profile));
    }));
    server.Delete(R"(/api/profiles/([^/]+))", guard([this](const Request& req, Response& res) {
      const std::string id = req.matches[1];
      store.delete_profile(id);
      send_json(res, 200, {{"deleted", id}});
    }));
    server.Post(R"(/api/profiles/([^/]+)/importance)",
                guard([this](const Request& req, Response& res) {
      const Json body = body_json(req);
      const auto base = store.get_profile(req.matches[1], body_revision(body));
      const auto catalog = store.catalog_for(base);
      const auto target = body.at("target").get<std::string>();
      const auto next = evaluation::set_importance(
          base, catalog, target, ImportanceRating(body.at("importance").get<int>()));
      require_selected_category(catalog, next);
      store.put_profile(next);
      send_json(res, 200, profile_to_json(next));
    }));
    server.Get(R"(/api/profiles/([^/]+)/weights)", guard([this](const Request& req, Response& res) {
      const auto profile = profile_at(req.matches[1], revision_param(req));
      send_json(res, 200, profile_weights(store.catalog_for(profile), profile));
    }));
    server.Post("/api/weights", guard([this](const Request& req, Response& res) {
      Json body = body_json(req);
      const auto catalog =
          body.contains("catalog_ref")
              ? store.get_catalog(CatalogRef{body["catalog_ref"].at("catalog_id").get<std::string>(),
                                             body["catalog_ref"].at("version").get<std::string>()})
              : store.get_catalog(std::string(kBuiltinCatalogId));
      body["catalog_ref"] = {{"catalog_id", catalog.catalog_id}, {"version", catalog.version}};
      if (!body.contains("profile_id")) body["profile_id"] = "preview";
      const auto profile = profile_from_json(body);
      auto violations = evaluation::validate_profile_structure(catalog, profile);
      if (!violations.empty()) {
        throw Error(ErrorCode::ValidationError,
                    "[" + violations.front().id + "] " + violations.front().message,
                    violations.front().id);
      }
      send_json(res, 200, profile_weights(catalog, profile));
    }));
  }

  void article_routes() {
    server.Get("/api/articles", guard([this](const Request&, Response& res) {
      Json list = Json::array();
      for (const auto& a : store.list_articles()) list.push_back(article_to_json(a));
      send_json(res, 200, {{"articles", list}});
    }));
    server.Post("/api/articles", guard([this](const Request& req, Response& res) {
      ArticleRecord article = article_from_json(body_json(req));
      article.revision = 1;
      store.put_article(article);
      send_json(res, 201, article_to_json(article));
    }));
    server.Get(R"(/api/articles/([^/]+))", guard([this](const Request& req, Response& res) {
      send_json(res, 200, article_to_json(store.get_article(req.matches[1])));
    }));
    server.Put(R"(/api/articles/([^/]+))", guard([this](const Request& req, Response& res) {
      const ArticleRecord article = article_from_json(body_json(req));
      if (article.article_id != req.matches[1]) {
        throw Error(ErrorCode::BadRequest, "article_id does not match the URL");
      }
      store.put_article(article);
      send_json(res, 200, article_to_json(article));
    }));
    server.Delete(R"(/api/articles/([^/]+))", guard([this](const Request& req, Response& res) {
      const std::string id = req.matches[1];
      store.delete_article(id);
      send_json(res, 200, {{"deleted", id}});
    }));
  }

  void assessment_routes() {
    server.Get("/api/assessments", guard([this](const Request& req, Response& res) {
      std::vector<Assessment> list;
      if (req.has_param("profile")) {
        const auto profile = profile_at(req.get_param_value("profile"), revision_param(req));
        list = store.list_assessments(profile.ref());
      } else {
        list = store.list_assessments();
      }
      Json out = Json::array();
      for (const auto& a : list) out.push_back(assessment_to_json(a));
      send_json(res, 200, {{"assessments", out}});
    }));
    server.Post("/api/assessments", guard([this](const Request& req, Response& res) {
      Json body = body_json(req);
      const auto& ref = body.at("profile_ref");
      std::optional<std::int64_t> rev;
      if (ref.contains("revision")) rev = ref["revision"].get<std::int64_t>();
      const auto profile = store.get_profile(ref.at("profile_id").get<std::string>(), rev);
      body["profile_ref"]["revision"] = profile.revision;
      Assessment assessment = assessment_from_json(body);
      if (assessment.assessment_id.empty())
        assessment.assessment_id =
            evaluation::default_assessment_id(assessment.article_ref, profile.ref());
      assessment.revision = 1;
      assessment.updated_at = now_rfc3339();
      assessment.status =
          evaluation::compute_status(store.catalog_for(profile), profile, assessment);
      store.put_assessment(assessment);
      send_json(res, 201, assessment_to_json(assessment));
    }));
    server.Get(R"(/api/assessments/([^/]+))", guard([this](const Request& req, Response& res) {
      send_json(res, 200, assessment_to_json(store.get_assessment(req.matches[1])));
    }));
    server.Put(R"(/api/assessments/([^/]+))", guard([this](const Request& req, Response& res) {
      Assessment assessment = assessment_from_json(body_json(req));
      if (assessment.assessment_id != req.matches[1]) {
        throw Error(ErrorCode::BadRequest, "assessment_id does not match the URL");
      }
      const auto profile = store.get_profile(assessment.profile_ref.profile_id,
                                             assessment.profile_ref.revision);
      assessment.updated_at = now_rfc3339();
      assessment.status =
          evaluation::compute_status(store.catalog_for(profile), profile, assessment);
      store.put_assessment(assessment);
      send_json(res, 200, assessment_to_json(assessment));
    }));
    server.Delete(R"(/api/assessments/([^/]+))", guard([this](const Request& req, Response& res) {
      const std::string id = req.matches[1];
      store.delete_assessment(id);
      send_json(res, 200, {{"deleted", id}});
    }));
    server.Post(R"(/api/assessments/([^/]+)/scores)",
                guard([this](const Request& req, Response& res) {
      const Json body = body_json(req);
      const auto current = store.get_assessment(req.matches[1]);
      if (body_revision(body) != current.revision) {
        throw Error(ErrorCode::Conflict,
                    "assessment " + current.assessment_id + " is at revision " +
                        std::to_string(current.revision),
                    current.assessment_id);
      }
      const auto profile = store.get_profile(current.profile_ref.profile_id,
                                             current.profile_ref.revision);
      std::optional<CriterionScore> score;
      const auto& value = body.at("score");
      if (value.is_string()) {
        score = CriterionScore::parse(value.get<std::string>());
      } else if (!value.is_null()) {
        score = CriterionScore::of(value.get<int>());
      }
      const auto next = evaluation::set_score(current, store.catalog_for(profile), profile,
                                              body.at("criterion").get<std::string>(), score);
      store.put_assessment(next);
      send_json(res, 200, assessment_to_json(next));
    }));
    server.Get(R"(/api/assessments/([^/]+)/rating)",
               guard([this](const Request& req, Response& res) {
      const auto assessment = store.get_assessment(req.matches[1]);
      const auto profile = store.get_profile(assessment.profile_ref.profile_id,
                                             assessment.profile_ref.revision);
      const auto report =
          evaluation::rate(store.catalog_for(profile), profile, assessment);
      Json out = rating_to_json(report);
      out["assessment_id"] = assessment.assessment_id;
      out["profile_ref"] = {{"profile_id", profile.profile_id},
                            {"revision", profile.revision}};
      send_json(res, 200, out);
    }));
    server.Get("/api/assessments.csv", guard([this](const Request& req, Response& res) {
      const auto profile = profile_at(required_param(req, "profile"), revision_param(req));
      res.status = 200;
      res.set_content(interchange::export_assessments(store.catalog_for(profile), profile,
                                                      store.list_assessments(profile.ref())),
                      "text/csv");
    }));
    server.Post("/api/assessments.csv", guard([this](const Request& req, Response& res) {
      const auto profile = profile_at(required_param(req, "profile"), revision_param(req));
      const auto stored = store.put_imported(
          interchange::import_assessment_csv(req.body, store.catalog_for(profile), profile));
      Json out = Json::array();
      for (const auto& assessment : stored) out.push_back(assessment_to_json(assessment));
      send_json(res, 200, {{"assessments", out}});
    }));
  }

  void analysis_routes() {
    server.Get("/api/rankings", guard([this](const Request& req, Response& res) {
      const auto profile = profile_at(required_param(req, "profile"), revision_param(req));
      std::vector<std::string> skipped;
      const auto assessments = complete_assessments(profile, &skipped);
      const auto ranking =
          evaluation::rank_articles(store.catalog_for(profile), profile, assessments);
      send_json(res, 200,
                {{"profile_id", profile.profile_id},
                 {"revision", profile.revision},
                 {"ranking", ranking_to_json(ranking)},
                 {"skipped_drafts", skipped}});
    }));
    server.Get("/api/rankings.csv", guard([this](const Request& req, Response& res) {
      const auto profile = profile_at(required_param(req, "profile"), revision_param(req));
      std::map<std::string, ArticleRecord> articles;
      for (auto& a : store.list_articles()) articles.emplace(a.article_id, a);
      res.status = 200;
      res.set_content(interchange::export_ratings(store.catalog_for(profile), profile,
                                                  complete_assessments(profile, nullptr),
                                                  articles),
                      "text/csv");
    }));
    server.Post("/api/whatif", guard([this](const Request& req, Response& res) {
      const Json body = body_json(req);
      std::optional<std::int64_t> rev;
      if (body.contains("revision")) rev = body["revision"].get<std::int64_t>();
      const auto profile = store.get_profile(body.at("profile_id").get<std::string>(), rev);
      const auto report = sensitivity::what_if(
          store.catalog_for(profile), profile, complete_assessments(profile, nullptr),
          deltas_from_json(body.value("deltas", Json::array())));
      Json out = sensitivity_to_json(report);
      out["profile_id"] = profile.profile_id;
      out["revision"] = profile.revision;
      send_json(res, 200, out);
    }));
    server.Get("/api/stability", guard([this](const Request& req, Response& res) {
      const auto profile = profile_at(required_param(req, "profile"), revision_param(req));
      const auto flags = sensitivity::stability_scan(
          store.catalog_for(profile), profile, complete_assessments(profile, nullptr));
      send_json(res, 200,
                {{"profile_id", profile.profile_id},
                 {"revision", profile.revision},
                 {"reversal_flags", flags}});
    }));
  }
};

Service::Service(Store store, std::string cors_origin)
    : impl_(std::make_unique<Impl>(std::move(store), std::move(cors_origin))) {}

Service::~Service() = default;

int Service::bind(const std::string& host, int port) {
  int bound = -1;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    bound = port;
  }
  if (bound < 0) {
    throw Error(ErrorCode::IoError,
                "cannot bind " + host + ":" + std::to_string(port), host);
  }
  return bound;
}

void Service::listen() { impl_->server.listen_after_bind(); }

void Service::stop() { impl_->server.stop(); }

int serve(const ServiceConfig& config) {
  Service service(Store::open(config.store_root), config.cors_origin);
  const int port = service.bind(config.host, config.port);

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  std::thread worker([&] { service.listen(); });
  std::cerr << "serving on http://" << config.host << ":" << port << " (store "
            << config.store_root.string() << ")\n";
  int received = 0;
  sigwait(&signals, &received);
  std::cerr << "shutting down\n";
  service.stop();
  worker.join();
  return 0;
}

}  // namespace rubric
