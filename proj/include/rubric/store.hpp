#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rubric/catalog.hpp"
#include "rubric/model.hpp"

namespace rubric {

/// Single-directory store, one JSON document per entity:
///
///   <root>/store.json                      schema_version marker
///   <root>/catalogs/<id>/<version>.json    immutable catalog versions
///   <root>/profiles/<id>/<revision>.json   every profile revision is kept
///   <root>/articles/<id>.json
///   <root>/assessments/<id>.json
///
/// Writes go to a temporary file that is renamed into place, so a failed put
/// leaves the directory untouched. Puts and deletes hold an exclusive lock on
/// <root>/.lock; reads are unsynchronized snapshots.
///
/// Every put is an optimistic revision check: a new entity must carry
/// revision 1, an update must carry the stored revision + 1, anything else is
/// Error{Conflict}. A second assessment of the same article under the same
/// profile revision is also a conflict.
class Store {
 public:
  /// Creates (or reuses) the directory layout and installs the built-in
  /// catalog. Throws Error{UnsupportedSchema} on a foreign existing store.
  static Store init(const std::filesystem::path& root);
  /// Throws Error{NotFound} when uninitialized, Error{UnsupportedSchema} on
  /// an unknown schema_version.
  static Store open(const std::filesystem::path& root);

  const std::filesystem::path& root() const { return root_; }

  void put_catalog(const CriteriaCatalog& catalog);
  CriteriaCatalog get_catalog(const CatalogRef& ref) const;
  /// Greatest version string for the id.
  CriteriaCatalog get_catalog(const std::string& catalog_id) const;
  std::vector<CatalogRef> list_catalogs() const;
  void delete_catalog(const CatalogRef& ref);

  void put_profile(const WeightProfile& profile);
  /// Latest revision when `revision` is empty.
  WeightProfile get_profile(const std::string& profile_id,
                            std::optional<std::int64_t> revision = {}) const;
  std::vector<std::int64_t> profile_revisions(const std::string& profile_id) const;
  std::vector<WeightProfile> list_profiles() const;  // latest revisions
  void delete_profile(const std::string& profile_id);

  void put_article(const ArticleRecord& article);
  ArticleRecord get_article(const std::string& article_id) const;
  std::vector<ArticleRecord> list_articles() const;
  void delete_article(const std::string& article_id);

  void put_assessment(const Assessment& assessment);
  Assessment get_assessment(const std::string& assessment_id) const;
  std::vector<Assessment> list_assessments() const;
  std::vector<Assessment> list_assessments(const ProfileRef& profile) const;
  /// An article has at most one assessment per profile revision.
  std::optional<Assessment> find_assessment(const std::string& article_id,
                                            const ProfileRef& profile) const;
  void delete_assessment(const std::string& assessment_id);
  /// Stores imported assessments. A row for an article already assessed
  /// under the same profile revision becomes the next revision of that
  /// assessment. Returns what was stored.
  std::vector<Assessment> put_imported(std::vector<Assessment> assessments);

  /// Catalog a profile revision refers to.
  CriteriaCatalog catalog_for(const WeightProfile& profile) const;

  /// FNV-1a over every stored file path and its bytes.
  std::uint64_t content_digest() const;

 private:
  explicit Store(std::filesystem::path root) : root_(std::move(root)) {}

  std::filesystem::path root_;
};

/// Ids usable as file names: [A-Za-z0-9][A-Za-z0-9._-]*, at most 128 chars.
bool is_valid_id(std::string_view id);

}  // namespace rubric
