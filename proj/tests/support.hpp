#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <string>

#include <unistd.h>

#include "rubric/report.hpp"

namespace testing {

// Scratch directory removed on scope exit.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    path_ = std::filesystem::temp_directory_path() /
            ("rubric-test-" + std::to_string(::getpid()) + "-" + std::to_string(stamp) + "-" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Fixture plus a second article scored 5 on every effective criterion.
struct TwoArticles {
  rubric::report::WorkedExample fixture = rubric::report::worked_example();
  rubric::ArticleRecord top{"all-fives", "All fives", {}, {}, {}, {}, 1};
  rubric::Assessment top_assessment;

  TwoArticles() {
    top_assessment = fixture.assessment;
    top_assessment.assessment_id =
        rubric::evaluation::default_assessment_id(top.article_id, fixture.profile.ref());
    top_assessment.article_ref = top.article_id;
    for (auto& [id, score] : top_assessment.scores) score = rubric::CriterionScore::of(5);
  }
};

}  // namespace testing
