#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "rubric/error.hpp"
#include "rubric/store.hpp"

namespace rubric {

/// HTTP status used for an error code: 422 for validation and degenerate
/// computations, 409 conflicts, 404 not found, 400 malformed requests.
int http_status(ErrorCode code);

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path store_root;
  std::string cors_origin = "*";
};

/// JSON API over a Store. Endpoints:
///
///   GET    /api/meta
///   GET    /api/catalogs                 POST /api/catalogs
///   GET    /api/catalogs/{id}[?version=]
///   GET    /api/profiles                 POST /api/profiles
///   GET    /api/profiles/{id}[?revision=]  PUT, DELETE
///   POST   /api/profiles/{id}/importance
///   GET    /api/profiles/{id}/weights[?revision=]
///   POST   /api/weights                  (transient, nothing stored)
///   GET    /api/articles                 POST /api/articles
///   GET    /api/articles/{id}            PUT, DELETE
///   GET    /api/assessments[?profile=&revision=]   POST /api/assessments
///   GET    /api/assessments/{id}         PUT, DELETE
///   POST   /api/assessments/{id}/scores
///   GET    /api/assessments/{id}/rating
///   GET    /api/assessments.csv?profile=   POST /api/assessments.csv?profile=
///   GET    /api/rankings?profile=[&revision=]
///   GET    /api/rankings.csv?profile=[&revision=]
///   POST   /api/whatif                   (transient, nothing stored)
///   GET    /api/stability?profile=[&revision=]
class Service {
 public:
  explicit Service(Store store, std::string cors_origin = "*");
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Returns the bound port. Throws Error{IoError} when binding fails.
  int bind(const std::string& host, int port);
  /// Serves on the bound socket until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Binds, serves until SIGINT or SIGTERM, then shuts down cleanly.
/// Returns the process exit code.
int serve(const ServiceConfig& config);

}  // namespace rubric
